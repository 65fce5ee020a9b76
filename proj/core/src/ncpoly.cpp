#include "racah/ncpoly.hpp"

#include <stdexcept>

namespace racah {

NCPoly::NCPoly(int rank) : rank_(rank) {
  if (rank < 1 || rank > kMaxRank) throw std::invalid_argument("rank out of range");
}

NCPoly NCPoly::constant(const Rational& c, int rank) { return word({}, rank, c); }

NCPoly NCPoly::word(Word w, int rank, const Rational& c) {
  NCPoly p(rank);
  for (const auto& g : w)
    if (!g.is_pentagon() && g.max_index() > rank)
      throw std::out_of_range("generator " + g.name() + " exceeds rank " + std::to_string(rank));
  p.add_term(w, c);
  return p;
}

NCPoly NCPoly::gen(const GeneratorId& g, int rank, const Rational& c) { return word({g}, rank, c); }

void check_same_rank(const NCPoly& a, const NCPoly& b) {
  if (a.rank() != b.rank())
    throw std::invalid_argument("rank mismatch: " + std::to_string(a.rank()) + " vs " +
                                std::to_string(b.rank()));
}

Rational NCPoly::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

int NCPoly::max_length() const {
  return terms_.empty() ? 0 : static_cast<int>(terms_.rbegin()->first.size());
}

void NCPoly::add_term(const Word& w, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void NCPoly::add_product(const Rational& c, const Word& left, const NCPoly& other, const Word& right) {
  if (c.is_zero()) return;
  Word w;
  for (const auto& [m, d] : other.terms_) {
    w.clear();
    w.reserve(left.size() + m.size() + right.size());
    w.insert(w.end(), left.begin(), left.end());
    w.insert(w.end(), m.begin(), m.end());
    w.insert(w.end(), right.begin(), right.end());
    add_term(w, c * d);
  }
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
  check_same_rank(*this, o);
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
  check_same_rank(*this, o);
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

NCPoly& NCPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, d] : terms_) d *= c;
  return *this;
}

NCPoly NCPoly::operator-() const {
  NCPoly r = *this;
  return r *= Rational(-1);
}

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
  check_same_rank(a, b);
  NCPoly out(a.rank());
  Word w;
  for (const auto& [u, c] : a.terms_)
    for (const auto& [v, d] : b.terms_) {
      w.assign(u.begin(), u.end());
      w.insert(w.end(), v.begin(), v.end());
      out.add_term(w, c * d);
    }
  return out;
}

NCPoly NCPoly::pow(int e) const {
  if (e < 0) throw std::invalid_argument("negative exponent");
  NCPoly r = constant(1, rank_);
  for (int i = 0; i < e; ++i) r = r * *this;
  return r;
}

std::string NCPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    Rational mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    first = false;
    if (w.empty()) {
      out += mag.str();
    } else {
      if (mag != Rational(1)) out += mag.str() + "*";
      out += word_name(w);
    }
  }
  return out;
}

NCPoly commutator(const NCPoly& a, const NCPoly& b) { return a * b - b * a; }

NCPoly anticommutator(const NCPoly& a, const NCPoly& b) { return a * b + b * a; }

NCPoly jacobi_defect(const NCPoly& a, const NCPoly& b, const NCPoly& c) {
  return commutator(a, commutator(b, c)) + commutator(b, commutator(c, a)) +
         commutator(c, commutator(a, b));
}

}  // namespace racah
