#pragma once

// Small random generators for property tests.

#include <ostream>
#include <random>
#include <vector>

#include "racah/ncpoly.hpp"
#include "racah/relations.hpp"

namespace racah {

// Readable gtest failure messages.
inline void PrintTo(const NCPoly& p, std::ostream* os) { *os << p.str(); }

}  // namespace racah

namespace racah::testgen {

inline Rational small_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 7);
  return Rational(num(rng), den(rng));
}

// C letters over {1..n}, all subset sizes.
inline std::vector<GeneratorId> c_letters(int n) {
  std::vector<GeneratorId> out;
  for (std::uint16_t m = 2; m < (1u << (n + 1)); m = static_cast<std::uint16_t>(m + 2))
    out.push_back(GeneratorId::C_mask(m));
  return out;
}

// Core letters P_i, P_ij, D_ijk.
inline std::vector<GeneratorId> core_letters(int n) {
  std::vector<GeneratorId> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) out.push_back(GeneratorId::P(i, j));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) out.push_back(GeneratorId::D(i, j, k).second);
  return out;
}

inline NCPoly random_poly(std::mt19937_64& rng, int rank, const std::vector<GeneratorId>& letters,
                          int max_terms = 4, int max_len = 3) {
  std::uniform_int_distribution<int> nterms(0, max_terms), len(0, max_len);
  std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);
  NCPoly p(rank);
  for (int t = nterms(rng); t > 0; --t) {
    Word w;
    for (int l = len(rng); l > 0; --l) w.push_back(letters[pick(rng)]);
    p.add_term(w, small_rational(rng));
  }
  return p;
}

}  // namespace racah::testgen
