#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "racah/ncpoly.hpp"
#include "racah/rational.hpp"

namespace racah {

struct RepParams {
  Rational c1{1}, c2{1}, c3{1}, c4{1}, N{1};

  Rational c(int i) const;
  // n_M = N + sum of c_i over M.
  Rational n(std::initializer_list<int> M) const;
  std::string str() const;
  friend bool operator==(const RepParams&, const RepParams&) = default;
};

// Empty when every denominator is nonzero for 0 <= s <= window.
std::vector<std::string> validate_params(const RepParams& p, int window);

struct LatticeState {
  int t = 0;
  int s = 0;
  bool on_lattice() const { return t >= 0 && s >= 0 && s <= t; }
  friend auto operator<=>(const LatticeState&, const LatticeState&) = default;
  std::string str() const { return std::to_string(t) + "," + std::to_string(s); }
};

using LinearCombo = std::map<LatticeState, Rational>;
std::string combo_str(const LinearCombo& v);

// The five non-central generators with explicit actions.
enum class RepGen { C12, C23, C123, C34, C234 };
std::optional<RepGen> rep_gen(const GeneratorId& g);
std::string rep_gen_name(RepGen g);

// Nonzero coefficients of gen|t,s>, keyed by displacement (dt, ds).
std::map<std::pair<int, int>, Rational> coeff(RepGen gen, int t, int s, const RepParams& p);
// Diagonal coefficient of C34; as_printed uses the factor
// n123 (n123 - t)(n12 - c3 - t - 1) instead of n123 (n123 - t - 1)(n12 - c3 - t).
Rational vartheta_star(int t, int s, const RepParams& p, bool as_printed = false);

// Exact operator on the window states {0 <= s <= t <= T}. A column is leaky
// when the true image of that state leaves the window; leaks propagate
// through sums and products, and only non-leaky ("reliable") columns are
// exact statements about the infinite module.
class SparseOperator {
 public:
  using Column = std::map<std::uint32_t, Rational>;

  SparseOperator() = default;
  SparseOperator(int window, bool slice);

  static SparseOperator scalar(const Rational& c, int window, bool slice);

  int window() const { return window_; }
  bool slice() const { return slice_; }
  const std::vector<LatticeState>& states() const;
  std::size_t dim() const { return cols_.size(); }
  const Column& column(std::size_t x) const { return cols_[x]; }
  bool leaky(std::size_t x) const { return leak_[x] != 0; }
  std::optional<std::size_t> index_of(const LatticeState& st) const;

  void set(std::size_t col, std::size_t row, const Rational& v);
  void mark_leaky(std::size_t col) { leak_[col] = 1; }

  SparseOperator& operator+=(const SparseOperator& o);
  SparseOperator& operator*=(const Rational& c);
  friend SparseOperator operator+(SparseOperator a, const SparseOperator& b) { return a += b; }
  friend SparseOperator operator-(SparseOperator a, SparseOperator b) { return a += (b *= Rational(-1)); }
  // (a * b) = a after b.
  friend SparseOperator operator*(const SparseOperator& a, const SparseOperator& b);

  LinearCombo apply(const LatticeState& st, bool* leaked = nullptr) const;
  std::size_t reliable_count() const;
  // First reliable column that is not zero, if any.
  std::optional<std::size_t> nonzero_reliable_column() const;
  bool equal_on_reliable(const SparseOperator& o) const;

 private:
  void check_compatible(const SparseOperator& o) const;

  int window_ = 0;
  bool slice_ = false;
  std::vector<Column> cols_;
  std::vector<std::uint8_t> leak_;
};

// Matrix of one contiguous-basis generator. Other letters go through Evaluator.
SparseOperator build_operator(const GeneratorId& g, const RepParams& p, int window, bool slice = false);

// The evaluation homomorphism NCPoly -> SparseOperator. Letters other than
// the contiguous basis are rewritten (decompose_to_basis, expand_to_C), word
// operators are cached by suffix.
class Evaluator {
 public:
  Evaluator(const RepParams& p, int window, bool slice = false);

  const RepParams& params() const { return params_; }
  int window() const { return window_; }
  bool slice() const { return slice_; }

  SparseOperator eval(const NCPoly& p);
  const SparseOperator& letter(const GeneratorId& g);

 private:
  const SparseOperator& word_op(const Word& w, std::size_t from);

  RepParams params_;
  int window_;
  bool slice_;
  std::unordered_map<GeneratorId, SparseOperator> letters_;
  std::unordered_map<Word, SparseOperator, WordHash> suffixes_;
};

// Rank-1 slice: the s = 0 states with A = C23, B = C12, D = 1/2[A,B].
struct Rank1Slice {
  SparseOperator A, B, D;
};
Rank1Slice rank1_slice(const RepParams& p, int window);

// Rows t0 >= 1 of the window out of which no generator lowers t: the states
// with t >= t0 then span an invariant subspace of the infinite module.
std::vector<int> probe_invariant_rows(const RepParams& p, int window);

struct NamedParams {
  std::string name;
  RepParams params;
  int window;
};
// (i) c = (1,1,1,1), N = 3 at window 4; (ii) c = (1/3,1/5,2/7,1/2), N = 4 at
// window 12; (iii) a random rational set drawn from seed, validated at window 12.
std::vector<NamedParams> default_param_sets(std::uint64_t seed, int window = 12);
RepParams random_params(std::uint64_t seed, int window);

}  // namespace racah
