#pragma once

#include <map>
#include <string>

#include "racah/generator.hpp"
#include "racah/rational.hpp"

namespace racah {

// Ordering used for the term map: shorter words first, then lexicographic.
struct WordLess {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

// Element of the free algebra Q<generators> over an ambient rank n.
// No zero coefficients are ever stored.
class NCPoly {
 public:
  using Terms = std::map<Word, Rational, WordLess>;

  explicit NCPoly(int rank = 4);
  static NCPoly constant(const Rational& c, int rank);
  static NCPoly word(Word w, int rank, const Rational& c = 1);
  static NCPoly gen(const GeneratorId& g, int rank, const Rational& c = 1);

  int rank() const { return rank_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coeff(const Word& w) const;
  int max_length() const;

  void add_term(const Word& w, const Rational& c);
  // this += c * left * other * right, without building temporaries.
  void add_product(const Rational& c, const Word& left, const NCPoly& other, const Word& right);

  NCPoly& operator+=(const NCPoly& o);
  NCPoly& operator-=(const NCPoly& o);
  NCPoly& operator*=(const Rational& c);
  NCPoly operator-() const;

  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  friend NCPoly operator*(const NCPoly& a, const NCPoly& b);
  friend NCPoly operator*(const Rational& c, NCPoly a) { return a *= c; }
  friend NCPoly operator*(NCPoly a, const Rational& c) { return a *= c; }
  friend bool operator==(const NCPoly& a, const NCPoly& b) {
    return a.rank_ == b.rank_ && a.terms_ == b.terms_;
  }

  NCPoly pow(int e) const;
  std::string str() const;

 private:
  int rank_;
  Terms terms_;
};

void check_same_rank(const NCPoly& a, const NCPoly& b);

NCPoly commutator(const NCPoly& a, const NCPoly& b);
NCPoly anticommutator(const NCPoly& a, const NCPoly& b);
// [a,[b,c]] + [b,[c,a]] + [c,[a,b]] in the free algebra (no reduction).
NCPoly jacobi_defect(const NCPoly& a, const NCPoly& b, const NCPoly& c);

// Replace every letter g by f(g) and multiply out.
template <class F>
NCPoly substitute(const NCPoly& p, F&& f, int rank) {
  NCPoly out(rank);
  for (const auto& [w, c] : p.terms()) {
    NCPoly t = NCPoly::constant(c, rank);
    for (const auto& g : w) t = t * f(g);
    out += t;
  }
  return out;
}

}  // namespace racah
