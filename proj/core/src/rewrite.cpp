#include "racah/rewrite.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace racah {

void RewriteSystem::add_letter(const GeneratorId& g, int degree, bool central) {
  if (degree < 1) throw std::invalid_argument("letter degree must be positive");
  if (degree_.emplace(g, degree).second) alphabet_.push_back(g);
  if (central) central_.insert(g);
  std::sort(alphabet_.begin(), alphabet_.end());
}

void RewriteSystem::add_substitution(const GeneratorId& g, NCPoly rhs) {
  if (in_alphabet(g)) throw std::invalid_argument(g.name() + " is already an alphabet letter");
  if (rhs.rank() != rank_) throw std::invalid_argument("substitution rank mismatch");
  subst_.insert_or_assign(g, std::move(rhs));
}

Measure RewriteSystem::measure(const Word& w) const {
  Measure m;
  m.length = static_cast<int>(w.size());
  for (const auto& g : w) {
    auto it = degree_.find(g);
    if (it == degree_.end()) throw std::invalid_argument("alphabet symbol with no ordering entry: " + g.name());
    m.degree += it->second;
    if (central_.contains(g)) ++m.central;
  }
  m.word = w;
  return m;
}

int RewriteSystem::degree(const Word& w) const { return measure(w).degree; }

void RewriteSystem::add_rule(RewriteRule rule) {
  if (rule.lhs.size() < 2) throw std::invalid_argument("rules need an lhs of length >= 2");
  if (rule.central_context && (rule.lhs.size() != 2 || !is_central(rule.lhs[0])))
    throw std::invalid_argument("central-context rule needs lhs (central, letter)");
  Measure lhs = measure(rule.lhs);
  Measure top{};
  bool any = false;
  for (const auto& [w, c] : rule.rhs.terms()) {
    Measure m = measure(w);
    if (!(m < lhs)) throw std::invalid_argument("rule " + word_name(rule.lhs) + " does not decrease the measure");
    if (rule.central_context &&
        std::tie(m.degree, m.length, m.central) >= std::tie(lhs.degree, lhs.length, lhs.central))
      throw std::invalid_argument("central-context rule must drop degree, length or central count");
    if (!any || top < m) top = m;
    any = true;
  }
  if (!any) {
    rule.grade_drop = "to zero";
  } else if (top.degree < lhs.degree) {
    rule.grade_drop = "degree " + std::to_string(lhs.degree) + "->" + std::to_string(top.degree);
  } else if (top.length < lhs.length) {
    rule.grade_drop = "length " + std::to_string(lhs.length) + "->" + std::to_string(top.length);
  } else if (top.central < lhs.central) {
    rule.grade_drop = "central letters " + std::to_string(lhs.central) + "->" + std::to_string(top.central);
  } else {
    rule.grade_drop = "word order";
  }
  std::size_t idx = rules_.size();
  if (rule.central_context) {
    central_by_x_[rule.lhs[1]].push_back(idx);
  } else {
    if (adjacent_.contains(rule.lhs)) throw std::invalid_argument("duplicate rule for " + word_name(rule.lhs));
    adjacent_.emplace(rule.lhs, idx);
    if (std::find(lhs_lengths_.begin(), lhs_lengths_.end(), rule.lhs.size()) == lhs_lengths_.end()) {
      lhs_lengths_.push_back(rule.lhs.size());
      std::sort(lhs_lengths_.begin(), lhs_lengths_.end());
    }
  }
  rules_.push_back(std::move(rule));
}

const RewriteRule* RewriteSystem::adjacent_rule(const Word& lhs) const {
  auto it = adjacent_.find(lhs);
  return it == adjacent_.end() ? nullptr : &rules_[it->second];
}

const std::vector<std::size_t>& RewriteSystem::central_rules_for(const GeneratorId& x) const {
  static const std::vector<std::size_t> none;
  auto it = central_by_x_.find(x);
  return it == central_by_x_.end() ? none : it->second;
}

long double RewriteSystem::word_bound(int d) const {
  // count[k] = number of words of degree exactly k.
  std::vector<long double> count(static_cast<std::size_t>(std::max(d, 0)) + 1, 0.0L);
  count[0] = 1;
  for (int k = 1; k <= d; ++k)
    for (const auto& [g, deg] : degree_)
      if (deg <= k) count[k] += count[k - deg];
  long double total = 0;
  for (auto c : count) total += c;
  return total;
}

void Reducer::check_rank(const NCPoly& p) const {
  if (p.rank() != rs_.rank())
    throw std::invalid_argument("rank mismatch: polynomial has rank " + std::to_string(p.rank()) +
                                ", rewrite system has rank " + std::to_string(rs_.rank()));
}

const NCPoly& Reducer::expand_letter(const GeneratorId& g) {
  if (auto it = expanded_.find(g); it != expanded_.end()) return it->second;
  NCPoly out(rs_.rank());
  if (rs_.in_alphabet(g)) {
    out = NCPoly::gen(g, rs_.rank());
  } else if (rs_.has_substitution(g)) {
    out = expand(rs_.substitution(g));
  } else {
    throw std::invalid_argument("alphabet symbol with no ordering entry: " + g.name());
  }
  return expanded_.emplace(g, std::move(out)).first->second;
}

NCPoly Reducer::expand(const NCPoly& p) {
  check_rank(p);
  return substitute(p, [this](const GeneratorId& g) { return expand_letter(g); }, rs_.rank());
}

NCPoly Reducer::reduce(const NCPoly& p) {
  check_rank(p);
  NCPoly out(rs_.rank());
  for (const auto& [w, c] : p.terms()) {
    NCPoly r = reduce_word(w);
    out.add_product(c, {}, r, {});
  }
  return out;
}

NCPoly Reducer::reduce_word(const Word& w) {
  bool in_alpha = std::all_of(w.begin(), w.end(), [&](const GeneratorId& g) { return rs_.in_alphabet(g); });
  if (in_alpha) {
    max_degree_ = std::max(max_degree_, rs_.degree(w));
    return normal_form(w);
  }
  NCPoly full = expand(NCPoly::word(w, rs_.rank()));
  NCPoly acc(rs_.rank());
  for (const auto& [u, c] : full.terms()) {
    max_degree_ = std::max(max_degree_, rs_.degree(u));
    acc.add_product(c, {}, normal_form(u), {});
  }
  return acc;
}

const NCPoly& Reducer::normal_form(const Word& w) {
  if (auto it = memo_.find(w); it != memo_.end()) return it->second;

  const int rank = rs_.rank();
  NCPoly rewritten(rank);
  bool fired = false;

  // 1. Out-of-order adjacent pairs (swap rules).
  for (std::size_t p = 0; p + 1 < w.size() && !fired; ++p) {
    if (!(w[p + 1] < w[p])) continue;
    if (const RewriteRule* r = rs_.adjacent_rule({w[p], w[p + 1]})) {
      Word left(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(p));
      Word right(w.begin() + static_cast<std::ptrdiff_t>(p) + 2, w.end());
      rewritten.add_product(1, left, r->rhs, right);
      fired = true;
    }
  }
  // 2. Other contiguous rules.
  for (std::size_t len : rs_.lhs_lengths()) {
    if (fired) break;
    for (std::size_t p = 0; p + len <= w.size() && !fired; ++p) {
      Word seg(w.begin() + static_cast<std::ptrdiff_t>(p), w.begin() + static_cast<std::ptrdiff_t>(p + len));
      if (len == 2 && seg[1] < seg[0]) continue;
      if (const RewriteRule* r = rs_.adjacent_rule(seg)) {
        Word left(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(p));
        Word right(w.begin() + static_cast<std::ptrdiff_t>(p + len), w.end());
        rewritten.add_product(1, left, r->rhs, right);
        fired = true;
      }
    }
  }
  // 3. Central-context rules: a central letter anywhere pairs with x anywhere.
  for (std::size_t p = 0; p < w.size() && !fired; ++p) {
    if (!rs_.is_central(w[p])) continue;
    for (std::size_t q = 0; q < w.size() && !fired; ++q) {
      if (q == p) continue;
      for (std::size_t idx : rs_.central_rules_for(w[q])) {
        const RewriteRule& r = rs_.rules()[idx];
        if (!(r.lhs[0] == w[p])) continue;
        Word rest;
        rest.reserve(w.size() - 1);
        for (std::size_t k = 0; k < w.size(); ++k)
          if (k != p) rest.push_back(w[k]);
        std::size_t q2 = q < p ? q : q - 1;
        Word left(rest.begin(), rest.begin() + static_cast<std::ptrdiff_t>(q2));
        Word right(rest.begin() + static_cast<std::ptrdiff_t>(q2) + 1, rest.end());
        rewritten.add_product(1, left, r.rhs, right);
        fired = true;
        break;
      }
    }
  }

  NCPoly result(rank);
  if (!fired) {
    result.add_term(w, 1);
  } else {
    ++steps_;
    for (const auto& [u, c] : rewritten.terms()) result.add_product(c, {}, normal_form(u), {});
  }
  return memo_.emplace(w, std::move(result)).first->second;
}

NCPoly reduce(const NCPoly& p, const RewriteSystem& rs) {
  Reducer r(rs);
  return r.reduce(p);
}

}  // namespace racah
