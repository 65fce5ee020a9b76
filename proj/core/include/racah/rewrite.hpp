#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "racah/ncpoly.hpp"

namespace racah {

// Termination measure of a word: total degree, length, number of central
// letters, then the word itself in generator order. Every rule must map its
// lhs to strictly smaller words; the measure is compatible with
// multiplication on both sides, so rewriting inside a context also
// decreases it.
struct Measure {
  int degree = 0;
  int length = 0;
  int central = 0;
  Word word;
  friend std::strong_ordering operator<=>(const Measure&, const Measure&) = default;
  friend bool operator==(const Measure&, const Measure&) = default;
};

struct RewriteRule {
  Word lhs;
  NCPoly rhs;
  // Human-readable termination annotation, filled in by add_rule.
  std::string grade_drop;
  // lhs = (c, x) with c central: fires when c and x occur anywhere in a word.
  bool central_context = false;
};

class RewriteSystem {
 public:
  explicit RewriteSystem(int rank) : rank_(rank) {}

  int rank() const { return rank_; }

  void add_letter(const GeneratorId& g, int degree, bool central = false);
  // Length-1 rule, applied as a substitution pre-pass before rewriting.
  void add_substitution(const GeneratorId& g, NCPoly rhs);
  // Throws std::invalid_argument unless every rhs word is below lhs.
  void add_rule(RewriteRule rule);

  bool in_alphabet(const GeneratorId& g) const { return degree_.contains(g); }
  bool has_substitution(const GeneratorId& g) const { return subst_.contains(g); }
  const NCPoly& substitution(const GeneratorId& g) const { return subst_.at(g); }
  int degree(const GeneratorId& g) const { return degree_.at(g); }
  bool is_central(const GeneratorId& g) const { return central_.contains(g); }
  const std::vector<GeneratorId>& alphabet() const { return alphabet_; }
  const std::vector<RewriteRule>& rules() const { return rules_; }

  Measure measure(const Word& w) const;
  int degree(const Word& w) const;
  // Number of alphabet words of total degree <= d; bounds the number of
  // distinct words a reduction of a degree-d input can ever rewrite.
  long double word_bound(int d) const;

  const RewriteRule* adjacent_rule(const Word& lhs) const;
  const std::vector<std::size_t>& central_rules_for(const GeneratorId& x) const;
  const std::vector<std::size_t>& lhs_lengths() const { return lhs_lengths_; }

 private:
  int rank_;
  std::vector<GeneratorId> alphabet_;
  std::unordered_map<GeneratorId, int> degree_;
  std::unordered_set<GeneratorId> central_;
  std::unordered_map<GeneratorId, NCPoly> subst_;
  std::vector<RewriteRule> rules_;
  std::unordered_map<Word, std::size_t, WordHash> adjacent_;
  std::unordered_map<GeneratorId, std::vector<std::size_t>> central_by_x_;
  std::vector<std::size_t> lhs_lengths_;
};

// A reduction session. Normal forms of words are memoized, so reusing one
// Reducer across many inputs is much faster than calling reduce() each time.
class Reducer {
 public:
  explicit Reducer(const RewriteSystem& rs) : rs_(rs) {}

  NCPoly reduce(const NCPoly& p);
  // Substitution pre-pass only: rewrite every non-alphabet letter.
  NCPoly expand(const NCPoly& p);

  std::uint64_t steps() const { return steps_; }
  // Largest total degree (after expansion) of any input seen so far.
  int max_input_degree() const { return max_degree_; }

 private:
  const NCPoly& normal_form(const Word& w);
  const NCPoly& expand_letter(const GeneratorId& g);
  NCPoly reduce_word(const Word& w);
  void check_rank(const NCPoly& p) const;

  const RewriteSystem& rs_;
  std::unordered_map<Word, NCPoly, WordHash> memo_;
  std::unordered_map<GeneratorId, NCPoly> expanded_;
  std::uint64_t steps_ = 0;
  int max_degree_ = 0;
};

// reduce(p) == 0 proves p lies in the ideal of the system's relations.
// A nonzero result is inconclusive: no confluence is claimed.
NCPoly reduce(const NCPoly& p, const RewriteSystem& rs);

}  // namespace racah
