#include <cstdio>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "racah/verifier.hpp"

namespace racah {

std::string method_name(Method m) { return m == Method::symbolic_reduce ? "symbolic-reduce" : "representation-eval"; }

std::string status_name(Status s) {
  switch (s) {
    case Status::proved_zero:
      return "proved-zero";
    case Status::zero_on_window:
      return "zero-on-window";
    case Status::inconclusive:
      return "inconclusive";
    default:
      return "FAILED";
  }
}

namespace {

nlohmann::ordered_json to_json(const InstanceRecord& r, bool timing) {
  nlohmann::ordered_json j;
  j["relation"] = r.relation;
  j["rank"] = r.rank;
  j["payload"] = r.payload;
  j["anchor"] = r.anchor;
  j["method"] = method_name(r.method);
  j["status"] = status_name(r.status);
  if (!r.params.empty()) j["params"] = r.params;
  if (!r.residue.empty()) j["residue"] = r.residue;
  if (r.witness) j["witness"] = {{"t", r.witness->state.t}, {"s", r.witness->state.s}, {"defect", r.witness->defect}};
  if (timing) j["seconds"] = r.seconds;
  return j;
}

std::string human(const VerificationReport& rep, bool timing) {
  std::ostringstream os;
  for (const auto& r : rep.instances) {
    os << status_name(r.status) << "  " << method_name(r.method) << "  " << r.relation << "[n=" << r.rank << "]";
    if (!r.payload.empty()) os << " " << r.payload;
    if (!r.params.empty()) os << " @" << r.params;
    if (timing) {
      char buf[32];
      std::snprintf(buf, sizeof buf, " (%.3fs)", r.seconds);
      os << buf;
    }
    os << "  -- " << r.anchor << "\n";
    if (r.witness) os << "    witness |" << r.witness->state.str() << "> -> " << r.witness->defect << "\n";
    if (!r.residue.empty()) os << "    residue " << r.residue << "\n";
  }
  auto s = rep.summary();
  os << "summary: " << rep.instances.size() << " checks, " << s.proved_zero << " proved-zero, " << s.zero_on_window
     << " zero-on-window, " << s.inconclusive << " inconclusive, " << s.failed << " FAILED\n";
  return os.str();
}

}  // namespace

std::string emit_report(const VerificationReport& r, const std::string& format, bool timing) {
  if (format == "human") return human(r, timing);
  if (format != "json") throw std::invalid_argument("unknown format '" + format + "' (expected json or human)");
  if (r.instances.empty()) return "{\"instances\": []}\n";
  std::string out = "{\"instances\": [\n";
  for (std::size_t k = 0; k < r.instances.size(); ++k) {
    out += to_json(r.instances[k], timing).dump();
    out += k + 1 < r.instances.size() ? ",\n" : "\n";
  }
  out += "]}\n";
  return out;
}

}  // namespace racah
