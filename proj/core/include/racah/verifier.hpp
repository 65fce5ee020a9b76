#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "racah/representation.hpp"

namespace racah {

enum class Method { symbolic_reduce, representation_eval };
enum class Status { proved_zero, zero_on_window, inconclusive, failed };

std::string method_name(Method m);
std::string status_name(Status s);

struct Witness {
  LatticeState state;
  std::string defect;  // image of the state under the relation
};

struct InstanceRecord {
  std::string relation;  // family or check name
  int rank = 4;
  std::string payload;
  std::string anchor;
  Method method = Method::symbolic_reduce;
  Status status = Status::proved_zero;
  std::string params;    // parameter set, representation checks only
  std::string residue;   // nonzero normal form of an inconclusive reduction
  std::optional<Witness> witness;
  double seconds = 0;
};

struct ReportSummary {
  std::size_t proved_zero = 0, zero_on_window = 0, inconclusive = 0, failed = 0;
};

struct VerificationReport {
  std::vector<InstanceRecord> instances;

  void append(VerificationReport other);
  // Deterministic order: relation, rank, payload, method, params.
  void sort();
  ReportSummary summary() const;
  // 0 when nothing FAILED, 1 otherwise.
  int exit_code() const;
};

std::vector<std::string> all_suites();

struct SuiteConfig {
  int rank = 4;
  std::vector<NamedParams> params;  // validated before any suite runs
  int window = 12;
  std::vector<std::string> suites;
  std::uint64_t seed = 0;
};

// Throws std::invalid_argument on unknown suites, bad ranks or invalid params.
void validate_config(const SuiteConfig& cfg);
VerificationReport run_suite(const SuiteConfig& cfg);
// Cyclic defects of all generator triples with catalog commutators
// substituted; representation checks too when params are given and n <= 4.
VerificationReport jacobi_suite(int n, const std::vector<NamedParams>& params = {});

// "json" or "human"; timing fields only when requested.
std::string emit_report(const VerificationReport& r, const std::string& format, bool timing = false);

// Flat "key = value" config: c1..c4, N, window, suites, rank, seed; '#' starts a comment.
struct ConfigFile {
  std::optional<RepParams> params;
  std::optional<int> window, rank;
  std::optional<std::vector<std::string>> suites;
  std::optional<std::uint64_t> seed;
};
ConfigFile parse_config(const std::string& text);
ConfigFile load_config(const std::string& path);
std::vector<std::string> parse_suite_list(const std::string& s);

}  // namespace racah
