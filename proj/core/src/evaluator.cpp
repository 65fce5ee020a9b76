#include <stdexcept>

#include "racah/relations.hpp"
#include "racah/representation.hpp"

namespace racah {

Evaluator::Evaluator(const RepParams& p, int window, bool slice) : params_(p), window_(window), slice_(slice) {
  if (auto errs = validate_params(p, window); !errs.empty())
    throw std::invalid_argument("invalid parameters: " + errs.front());
}

const SparseOperator& Evaluator::letter(const GeneratorId& g) {
  if (auto it = letters_.find(g); it != letters_.end()) return it->second;
  SparseOperator op;
  if (g.kind() == Kind::C && is_contiguous(g.mask())) {
    if (g.max_index() > 4) throw std::invalid_argument(g.name() + " is outside the rank-4 representation");
    op = build_operator(g, params_, window_, slice_);
  } else if (g.kind() == Kind::C) {
    if (g.max_index() > 4) throw std::invalid_argument(g.name() + " is outside the rank-4 representation");
    op = eval(decompose_to_basis(g.mask()));
  } else {
    if (!g.is_pentagon() && g.max_index() > 4) throw std::invalid_argument(g.name() + " is outside the rank-4 representation");
    op = eval(expand_to_C(NCPoly::gen(g, 4)));
  }
  return letters_.emplace(g, std::move(op)).first->second;
}

const SparseOperator& Evaluator::word_op(const Word& w, std::size_t from) {
  if (from + 1 == w.size()) return letter(w[from]);
  Word key(w.begin() + static_cast<std::ptrdiff_t>(from), w.end());
  if (auto it = suffixes_.find(key); it != suffixes_.end()) return it->second;
  SparseOperator op = letter(w[from]) * word_op(w, from + 1);
  return suffixes_.emplace(std::move(key), std::move(op)).first->second;
}

SparseOperator Evaluator::eval(const NCPoly& p) {
  SparseOperator out(window_, slice_);
  for (const auto& [w, c] : p.terms()) {
    if (w.empty()) {
      out += SparseOperator::scalar(c, window_, slice_);
      continue;
    }
    SparseOperator t = word_op(w, 0);
    t *= c;
    out += t;
  }
  return out;
}

Rank1Slice rank1_slice(const RepParams& p, int window) {
  Evaluator ev(p, window, true);
  SparseOperator A = ev.letter(GeneratorId::C({2, 3}));
  SparseOperator B = ev.letter(GeneratorId::C({1, 2}));
  SparseOperator D = A * B - B * A;
  D *= Rational(1, 2);
  return {std::move(A), std::move(B), std::move(D)};
}

}  // namespace racah
