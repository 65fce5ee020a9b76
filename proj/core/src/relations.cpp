#include "racah/relations.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace racah {

namespace {

const Rational kHalf(1, 2);

void check_rank_range(int n) {
  if (n < 3 || n > kMaxRank) throw std::invalid_argument("rank n must lie in 3..9");
}

void check_indices(const std::vector<int>& idx, int n) {
  for (int i : idx)
    if (i < 1 || i > n) throw std::out_of_range("index " + std::to_string(i) + " outside 1.." + std::to_string(n));
}

std::uint16_t full_mask(int n) { return static_cast<std::uint16_t>(((1u << (n + 1)) - 1) & ~1u); }

NCPoly C(std::uint16_t mask, int n) { return gen_C_mask(mask, n); }
NCPoly P(int i, int j, int n) { return gen_P(i, j, n); }
NCPoly P(int i, int n) { return gen_P(i, i, n); }
NCPoly D(int i, int j, int k, int n) { return D_of(i, j, k, n); }
std::uint16_t bit(int i) { return static_cast<std::uint16_t>(1u << i); }

// Nonempty subsets of {1..n} as masks, by increasing mask value.
std::vector<std::uint16_t> subsets(int n) {
  std::vector<std::uint16_t> out;
  for (std::uint16_t m = 2; m <= full_mask(n); m = static_cast<std::uint16_t>(m + 2))
    if ((m & ~full_mask(n)) == 0) out.push_back(m);
  return out;
}

// All ordered tuples of k distinct indices from {1..n}.
std::vector<std::vector<int>> distinct_tuples(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int i = 1; i <= n; ++i) {
      if (used[static_cast<std::size_t>(i)]) continue;
      used[static_cast<std::size_t>(i)] = true;
      cur.push_back(i);
      self(self);
      cur.pop_back();
      used[static_cast<std::size_t>(i)] = false;
    }
  };
  rec(rec);
  return out;
}

std::vector<std::vector<int>> combinations(const std::vector<int>& pool, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < pool.size(); ++i) {
      cur.push_back(pool[i]);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<int> range1(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return v;
}

long binom(long n, long k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

long falling(long n, long k) {
  long r = 1;
  for (long i = 0; i < k; ++i) r *= (n - i);
  return k > n ? 0 : r;
}

long ipow(long b, int e) {
  long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Stirling numbers of the second kind S(m, 3).
long stirling3(long m) {
  if (m < 3) return 0;
  return (ipow(3, static_cast<int>(m)) - 3 * ipow(2, static_cast<int>(m)) + 3) / 6;
}

long disjoint_triples(int n) {
  long total = 0;
  for (int m = 3; m <= n; ++m) total += binom(n, m) * stirling3(m);
  return total;
}

std::string mask_str(int m) {
  std::string s;
  for (int i : mask_indices(static_cast<std::uint16_t>(m))) s += static_cast<char>('0' + i);
  return s;
}

bool is_subset_family(Family f) {
  switch (f) {
    case Family::central:
    case Family::decomposition:
    case Family::quad:
    case Family::quadB:
    case Family::d_cyclic:
      return true;
    default:
      return false;
  }
}

bool is_pentagon_family(Family f) { return f >= Family::gamma_def && f <= Family::omega_outer_mirror; }

}  // namespace

// ---- generators -----------------------------------------------------------

NCPoly gen_C(const std::vector<int>& I, int n) {
  if (I.empty()) throw std::invalid_argument("C needs a nonempty subset");
  check_indices(I, n);
  std::uint16_t m = index_mask(I);
  return gen_C_mask(m, n);
}

NCPoly gen_C_mask(std::uint16_t mask, int n) {
  if (mask == 0 || (mask & ~full_mask(n))) throw std::out_of_range("subset outside 1..n");
  return NCPoly::gen(GeneratorId::C_mask(mask), n);
}

NCPoly gen_P(int i, int j, int n) {
  check_indices({i, j}, n);
  return NCPoly::gen(GeneratorId::P(i, j), n);
}

std::pair<NCPoly, int> gen_D(int i, int j, int k, int n) {
  check_indices({i, j, k}, n);
  auto [sign, g] = GeneratorId::D(i, j, k);
  return {NCPoly::gen(g, n), sign};
}

NCPoly D_of(int i, int j, int k, int n) {
  auto [p, sign] = gen_D(i, j, k, n);
  return sign < 0 ? -p : p;
}

GeneratorId pentagon_C(Kind kind, int label) {
  static const std::uint16_t omega_masks[5] = {index_mask({2, 3}), index_mask({3, 4}), index_mask({1, 2, 3}),
                                               index_mask({2, 3, 4}), index_mask({1, 2})};
  int r = ((label % 5) + 5) % 5;
  if (kind == Kind::Omega) return GeneratorId::C_mask(omega_masks[r]);
  if (kind == Kind::omega) return r == 0 ? GeneratorId::C({1, 2, 3, 4}) : GeneratorId::C({r});
  throw std::invalid_argument("Gamma labels have no single C");
}

NCPoly pentagon_assign(Kind kind, int label) {
  if (kind == Kind::Gamma) {
    NCPoly a = NCPoly::gen(pentagon_C(Kind::Omega, label + 2), 4);
    NCPoly b = NCPoly::gen(pentagon_C(Kind::Omega, label - 2), 4);
    return kHalf * commutator(a, b);
  }
  return NCPoly::gen(pentagon_C(kind, label), 4);
}

NCPoly Om(int i) { return NCPoly::gen(GeneratorId::pentagon(Kind::Omega, i), 4); }
NCPoly om(int i) { return NCPoly::gen(GeneratorId::pentagon(Kind::omega, i), 4); }
NCPoly Ga(int i) { return NCPoly::gen(GeneratorId::pentagon(Kind::Gamma, i), 4); }

const std::vector<GeneratorId>& contiguous_basis() {
  static const std::vector<GeneratorId> basis = {
      GeneratorId::C({1}),       GeneratorId::C({2}),       GeneratorId::C({3}),
      GeneratorId::C({4}),       GeneratorId::C({1, 2}),    GeneratorId::C({2, 3}),
      GeneratorId::C({3, 4}),    GeneratorId::C({1, 2, 3}), GeneratorId::C({2, 3, 4}),
      GeneratorId::C({1, 2, 3, 4})};
  return basis;
}

bool is_contiguous(std::uint16_t mask) {
  auto idx = mask_indices(mask);
  return !idx.empty() && idx.back() - idx.front() + 1 == static_cast<int>(idx.size());
}

NCPoly decompose_to_basis(std::uint16_t mask) {
  if (mask == 0 || (mask & ~full_mask(4))) throw std::out_of_range("subset outside 1..4");
  if (is_contiguous(mask)) return C(mask, 4);
  auto idx = mask_indices(mask);
  if (idx.size() == 2) {
    int a = idx[0], b = idx[1];
    // Pairs that are not intervals, solved from the three-index decompositions.
    if (a == 1 && b == 3)
      return C(index_mask({1, 2, 3}), 4) - C(index_mask({1, 2}), 4) - C(index_mask({2, 3}), 4) + C(bit(1), 4) +
             C(bit(2), 4) + C(bit(3), 4);
    if (a == 2 && b == 4)
      return C(index_mask({2, 3, 4}), 4) - C(index_mask({2, 3}), 4) - C(index_mask({3, 4}), 4) + C(bit(2), 4) +
             C(bit(3), 4) + C(bit(4), 4);
    return C(index_mask({1, 2, 3, 4}), 4) - C(index_mask({1, 2, 3}), 4) - C(index_mask({2, 3, 4}), 4) +
           C(bit(1), 4) + C(index_mask({2, 3}), 4) + C(bit(4), 4);
  }
  // C_I = sum of pair C's minus (|I|-2) times the singletons.
  NCPoly out(4);
  for (std::size_t x = 0; x < idx.size(); ++x)
    for (std::size_t y = x + 1; y < idx.size(); ++y) out += decompose_to_basis(index_mask({idx[x], idx[y]}));
  Rational k(static_cast<long>(idx.size()) - 2);
  for (int i : idx) out -= k * C(bit(i), 4);
  return out;
}

namespace {

NCPoly C_as_P(std::uint16_t mask, int n) {
  NCPoly out(n);
  auto idx = mask_indices(mask);
  for (std::size_t x = 0; x < idx.size(); ++x)
    for (std::size_t y = x + 1; y < idx.size(); ++y) out += P(idx[x], idx[y], n);
  for (int i : idx) out -= P(i, n);
  return out;
}

NCPoly letter_to_C(const GeneratorId& g, int n) {
  switch (g.kind()) {
    case Kind::C:
      return NCPoly::gen(g, n);
    case Kind::P: {
      auto idx = g.indices();
      if (idx.size() == 1) return -C(g.mask(), n);
      return C(g.mask(), n) - C(bit(idx[0]), n) - C(bit(idx[1]), n);
    }
    case Kind::D: {
      auto idx = g.indices();
      return kHalf * commutator(C(index_mask({idx[0], idx[1]}), n), C(index_mask({idx[1], idx[2]}), n));
    }
    default:
      return pentagon_assign(g.kind(), g.label());
  }
}

}  // namespace

NCPoly expand_to_P(const NCPoly& p) {
  const int n = p.rank();
  return substitute(
      p,
      [n](const GeneratorId& g) {
        switch (g.kind()) {
          case Kind::C:
            return C_as_P(g.mask(), n);
          case Kind::P:
          case Kind::D:
            return NCPoly::gen(g, n);
          default:
            return expand_to_P(pentagon_assign(g.kind(), g.label()));
        }
      },
      n);
}

NCPoly expand_to_C(const NCPoly& p) {
  const int n = p.rank();
  return substitute(p, [n](const GeneratorId& g) { return letter_to_C(g, n); }, n);
}

NCPoly expand_to_basis(const NCPoly& p) {
  if (p.rank() != 4) throw std::invalid_argument("contiguous basis needs rank 4");
  NCPoly c = expand_to_C(p);
  return substitute(c, [](const GeneratorId& g) { return decompose_to_basis(g.mask()); }, 4);
}

// ---- relation catalog -------------------------------------------------------

namespace {

struct FamilyInfo {
  Family f;
  const char* name;
  const char* anchor;
};

const FamilyInfo kFamilies[] = {
    {Family::central, "central", "[C_I, C_J] = 0 for nested or disjoint I, J"},
    {Family::decomposition, "decomposition", "C_IJK = C_IJ + C_JK + C_IK - C_I - C_J - C_K"},
    {Family::quad, "quad", "1/2[C_JK,[C_IJ,C_JK]] = C_IK C_JK - C_JK C_IJ + (C_K - C_J)(C_I - C_IJK)"},
    {Family::quadB, "quadB", "1/2[C_KI,[C_IJ,C_JK]] = C_IJ C_KI - C_KI C_JK + (C_I - C_K)(C_J - C_IJK)"},
    {Family::d_cyclic, "d_cyclic", "[C_IJ, C_JK] = [C_KI, C_IJ]: D is invariant under cyclic shifts"},
    {Family::ddef, "ddef", "[P_ij, P_jk] = 2 D_ijk"},
    {Family::inner_P, "inner_P", "[P_jk, D_ijk] = (P_jk - 2P_j) P_ki - P_ij (P_jk - 2P_k)"},
    {Family::outer_P, "outer_P", "[P_ij, D_jkl] = P_il P_jk - P_jl P_ik"},
    {Family::outer_lemma_c, "outer_lemma_c", "[C_ij, D_jkl] in C's: (C_il - C_i - C_l)(C_jk - C_j - C_k) - (C_jl - C_j - C_l)(C_ik - C_i - C_k)"},
    {Family::dd, "dd", "[D_ijk, D_jkl] = P_jk (D_jil + D_ilk)"},
    {Family::dd_op, "dd_op", "[D_ijk, D_jkl] = (D_kil + D_jil) P_jk"},
    {Family::dd_one_overlap, "dd_one_overlap", "[D_ijk, D_klm] = P_jk D_lmi - P_ki D_jlm"},
    {Family::dd_disjoint, "dd_disjoint", "[D_ijk, D_lmn] = 0 for disjoint triples"},
    {Family::pdt, "pdt", "P_il D_ljk + P_jl D_lki + P_kl D_lij + 2 P_l D_ijk = 0"},
    {Family::pd_pair, "pd_pair", "[C_kl, D_ijk] + [C_kl, D_ijl] = 0"},
    {Family::pd_flip, "pd_flip", "[P_ij, D_jkl] = -[P_ji, D_ikl]"},
    {Family::pd_shift, "pd_shift", "[P_ij, D_jkl] = [P_kl, D_lij]"},
    {Family::pd_switch, "pd_switch", "[P_ij, D_jkl] + [P_kj, D_jli] + [P_lj, D_jik] = 0"},
    {Family::pdi, "pdi", "2 P_i D_jkl + P_ji D_ikl + P_ki D_ilj + P_li D_ijk = 0"},
    {Family::pdi_op, "pdi_op", "2 D_jkl P_i + D_ikl P_ji + D_ilj P_ki + D_ijk P_li = 0"},
    {Family::gamma_def, "gamma_def", "[Omega_{i+2}, Omega_{i-2}] = 2 Gamma_i"},
    {Family::gamma_sum, "gamma_sum", "Gamma_0 + ... + Gamma_4 = 0"},
    {Family::omega_central, "omega_central", "omega_i commutes with every pentagon label"},
    {Family::omega_commute, "omega_commute", "[Omega_{i-1}, Omega_{i+1}] = 0"},
    {Family::omega_gamma_commute, "omega_gamma_commute", "[Omega_i, Gamma_i] = 0"},
    {Family::omega_inner, "omega_inner", "inner pentagon relation [Omega_i, Gamma_{i+2}]"},
    {Family::omega_inner_mirror, "omega_inner_mirror", "reflected inner pentagon relation [Omega_i, Gamma_{i-2}]"},
    {Family::omega_outer, "omega_outer", "outer pentagon relation [Omega_i, Gamma_{i+1}]"},
    {Family::omega_outer_mirror, "omega_outer_mirror", "reflected outer pentagon relation [Omega_i, Gamma_{i-1}]"},
    {Family::pres_rank1, "pres_rank1", "rank-1 presentation in A = C23, B = C12, D = 1/2[A,B]"},
};

const FamilyInfo& info(Family f) {
  for (const auto& fi : kFamilies)
    if (fi.f == f) return fi;
  throw std::logic_error("unknown family");
}

NCPoly pentagon_relation(const RelationId& id) {
  const auto& v = id.idx;
  int i = v.empty() ? 0 : v[0];
  switch (id.family) {
    case Family::gamma_def:
      return commutator(Om(i + 2), Om(i - 2)) - Rational(2) * Ga(i);
    case Family::gamma_sum:
      return Ga(0) + Ga(1) + Ga(2) + Ga(3) + Ga(4);
    case Family::omega_central: {
      int kind = v[1], j = v[2];
      NCPoly x = kind == 0 ? om(j) : (kind == 1 ? Om(j) : Ga(j));
      return commutator(om(i), x);
    }
    case Family::omega_commute:
      return commutator(Om(i - 1), Om(i + 1));
    case Family::omega_gamma_commute:
      return commutator(Om(i), Ga(i));
    case Family::omega_inner: {
      NCPoly rhs = Om(i) * Om(i + 2) - anticommutator(Om(i), Om(i - 1)) - Om(i) * Om(i) +
                   (om(i + 1) + om(i + 2) + om(i + 3)) * Om(i) + (om(i + 2) - om(i + 3)) * Om(i + 2) +
                   om(i + 1) * (om(i + 3) - om(i + 2));
      return commutator(Om(i), Ga(i + 2)) - rhs;
    }
    case Family::omega_inner_mirror: {
      NCPoly rhs = Om(i) * Om(i - 2) - anticommutator(Om(i), Om(i + 1)) - Om(i) * Om(i) +
                   (om(i - 1) + om(i - 2) + om(i - 3)) * Om(i) + (om(i - 2) - om(i - 3)) * Om(i - 2) +
                   om(i - 1) * (om(i - 3) - om(i - 2));
      return commutator(Om(i), Ga(i - 2)) + rhs;
    }
    case Family::omega_outer: {
      NCPoly rhs(4);
      for (int k = 0; k < 5; ++k)
        rhs += Rational(k % 2 ? -1 : 1, 2) * anticommutator(Om(i + k), Om(i + k - 1));
      rhs += Om(i) * Om(i + 3) - om(i + 1) * (Om(i) + Om(i + 1)) - om(i + 2) * (Om(i + 2) + Om(i + 3)) -
             om(i - 1) * Om(i - 1) + om(i + 1) * om(i + 2) + om(i + 1) * om(i - 1) + om(i + 2) * om(i - 1);
      return commutator(Om(i), Ga(i + 1)) - rhs;
    }
    case Family::omega_outer_mirror: {
      NCPoly rhs(4);
      for (int k = 0; k < 5; ++k)
        rhs += Rational(k % 2 ? -1 : 1, 2) * anticommutator(Om(i - k), Om(i - k + 1));
      rhs += Om(i) * Om(i - 3) - om(i - 1) * (Om(i) + Om(i - 1)) - om(i - 2) * (Om(i - 2) + Om(i - 3)) -
             om(i + 1) * Om(i + 1) + om(i - 1) * om(i - 2) + om(i - 1) * om(i + 1) + om(i - 2) * om(i + 1);
      return commutator(Om(i), Ga(i - 1)) + rhs;
    }
    default:
      throw std::logic_error("not a pentagon family");
  }
}

}  // namespace

std::string family_name(Family f) { return info(f).name; }

std::string family_anchor(Family f) { return info(f).anchor; }

std::optional<Family> family_from_name(const std::string& s) {
  for (const auto& fi : kFamilies)
    if (s == fi.name) return fi.f;
  return std::nullopt;
}

const std::vector<Family>& all_families() {
  static const std::vector<Family> fams = [] {
    std::vector<Family> v;
    for (const auto& fi : kFamilies) v.push_back(fi.f);
    return v;
  }();
  return fams;
}

std::string RelationId::payload() const {
  std::ostringstream os;
  if (is_subset_family(family)) {
    static const char* names[] = {"I", "J", "K"};
    for (std::size_t k = 0; k < idx.size(); ++k) {
      if (k) os << ' ';
      os << names[k] << '=' << mask_str(idx[k]);
    }
  } else if (family == Family::omega_central) {
    static const char* kinds[] = {"om", "Om", "Ga"};
    os << "i=" << idx[0] << " x=" << kinds[idx[1]] << idx[2];
  } else if (is_pentagon_family(family)) {
    if (!idx.empty()) os << "i=" << idx[0];
  } else if (family == Family::pres_rank1) {
    os << "k=" << idx[0];
  } else {
    for (int i : idx) os << i;
  }
  return os.str();
}

NCPoly relation(const RelationId& id) {
  const int n = id.n;
  const auto& v = id.idx;
  auto need = [&](std::size_t k) {
    if (v.size() != k) throw std::invalid_argument("malformed indices for " + family_name(id.family));
  };
  auto distinct = [&](std::size_t k) {
    need(k);
    check_indices(v, n);
    std::vector<int> s = v;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
      throw std::invalid_argument("indices must be distinct for " + family_name(id.family));
  };
  auto disjoint_masks = [&](std::size_t k) {
    need(k);
    int acc = 0;
    for (int m : v) {
      if (m <= 0 || (m & ~full_mask(n)) || (acc & m))
        throw std::invalid_argument("subsets must be nonempty, disjoint and within 1..n");
      acc |= m;
    }
  };
  if (is_pentagon_family(id.family) && n != 4) throw std::invalid_argument("pentagon relations need rank 4");

  switch (id.family) {
    case Family::central: {
      need(2);
      std::uint16_t I = static_cast<std::uint16_t>(v[0]), J = static_cast<std::uint16_t>(v[1]);
      bool nested = (I & J) == I || (I & J) == J;
      if (!(nested || (I & J) == 0)) throw std::invalid_argument("central needs nested or disjoint subsets");
      return commutator(C(I, n), C(J, n));
    }
    case Family::decomposition: {
      disjoint_masks(3);
      auto I = static_cast<std::uint16_t>(v[0]), J = static_cast<std::uint16_t>(v[1]),
           K = static_cast<std::uint16_t>(v[2]);
      return C(I | J | K, n) - (C(I | J, n) + C(J | K, n) + C(I | K, n) - C(I, n) - C(J, n) - C(K, n));
    }
    case Family::quad:
    case Family::quadB:
    case Family::d_cyclic: {
      disjoint_masks(3);
      auto I = static_cast<std::uint16_t>(v[0]), J = static_cast<std::uint16_t>(v[1]),
           K = static_cast<std::uint16_t>(v[2]);
      NCPoly CIJ = C(I | J, n), CJK = C(J | K, n), CIK = C(I | K, n), CIJK = C(I | J | K, n);
      NCPoly CI = C(I, n), CJ = C(J, n), CK = C(K, n);
      if (id.family == Family::quad)
        return kHalf * commutator(CJK, commutator(CIJ, CJK)) - (CIK * CJK - CJK * CIJ + (CK - CJ) * (CI - CIJK));
      if (id.family == Family::quadB)
        return kHalf * commutator(CIK, commutator(CIJ, CJK)) - (CIJ * CIK - CIK * CJK + (CI - CK) * (CJ - CIJK));
      return commutator(CIJ, CJK) - commutator(CIK, CIJ);
    }
    case Family::ddef: {
      distinct(3);
      int i = v[0], j = v[1], k = v[2];
      return commutator(P(i, j, n), P(j, k, n)) - Rational(2) * D(i, j, k, n);
    }
    case Family::inner_P: {
      distinct(3);
      int i = v[0], j = v[1], k = v[2];
      NCPoly rhs = (P(j, k, n) - Rational(2) * P(j, n)) * P(k, i, n) -
                   P(i, j, n) * (P(j, k, n) - Rational(2) * P(k, n));
      return commutator(P(j, k, n), D(i, j, k, n)) - rhs;
    }
    case Family::outer_P: {
      distinct(4);
      int i = v[0], j = v[1], k = v[2], l = v[3];
      return commutator(P(i, j, n), D(j, k, l, n)) - (P(i, l, n) * P(j, k, n) - P(j, l, n) * P(i, k, n));
    }
    case Family::outer_lemma_c: {
      distinct(4);
      int i = v[0], j = v[1], k = v[2], l = v[3];
      auto c2 = [&](int a, int b) { return C(index_mask({a, b}), n); };
      auto c1 = [&](int a) { return C(bit(a), n); };
      NCPoly Djkl = kHalf * commutator(c2(j, k), c2(k, l));
      NCPoly rhs = (c2(i, l) - c1(i) - c1(l)) * (c2(j, k) - c1(j) - c1(k)) -
                   (c2(j, l) - c1(j) - c1(l)) * (c2(i, k) - c1(i) - c1(k));
      return commutator(c2(i, j), Djkl) - rhs;
    }
    case Family::dd: {
      distinct(4);
      int i = v[0], j = v[1], k = v[2], l = v[3];
      return commutator(D(i, j, k, n), D(j, k, l, n)) - P(j, k, n) * (D(j, i, l, n) + D(i, l, k, n));
    }
    case Family::dd_op: {
      distinct(4);
      int i = v[0], j = v[1], k = v[2], l = v[3];
      return commutator(D(i, j, k, n), D(j, k, l, n)) - (D(k, i, l, n) + D(j, i, l, n)) * P(j, k, n);
    }
    case Family::dd_one_overlap: {
      distinct(5);
      int i = v[0], j = v[1], k = v[2], l = v[3], m = v[4];
      return commutator(D(i, j, k, n), D(k, l, m, n)) -
             (P(j, k, n) * D(l, m, i, n) - P(k, i, n) * D(j, l, m, n));
    }
    case Family::dd_disjoint: {
      distinct(6);
      return commutator(D(v[0], v[1], v[2], n), D(v[3], v[4], v[5], n));
    }
    case Family::pdt: {
      distinct(4);
      int l = v[0], i = v[1], j = v[2], k = v[3];
      return P(i, l, n) * D(l, j, k, n) + P(j, l, n) * D(l, k, i, n) + P(k, l, n) * D(l, i, j, n) +
             Rational(2) * P(l, n) * D(i, j, k, n);
    }
    case Family::pd_pair: {
      distinct(4);
      int i = v[0], j = v[1], k = v[2], l = v[3];
      auto c2 = [&](int a, int b) { return C(index_mask({a, b}), n); };
      NCPoly Dijk = kHalf * commutator(c2(i, j), c2(j, k));
      NCPoly Dijl = kHalf * commutator(c2(i, j), c2(j, l));
      return commutator(c2(k, l), Dijk) + commutator(c2(k, l), Dijl);
    }
    case Family::pd_flip: {
      distinct(4);
      int i = v[0], j = v[1], k = v[2], l = v[3];
      return commutator(P(i, j, n), D(j, k, l, n)) + commutator(P(j, i, n), D(i, k, l, n));
    }
    case Family::pd_shift: {
      distinct(4);
      int i = v[0], j = v[1], k = v[2], l = v[3];
      return commutator(P(i, j, n), D(j, k, l, n)) - commutator(P(k, l, n), D(l, i, j, n));
    }
    case Family::pd_switch: {
      distinct(4);
      int i = v[0], j = v[1], k = v[2], l = v[3];
      return commutator(P(i, j, n), D(j, k, l, n)) + commutator(P(k, j, n), D(j, l, i, n)) +
             commutator(P(l, j, n), D(j, i, k, n));
    }
    case Family::pdi: {
      distinct(4);
      int i = v[0], j = v[1], k = v[2], l = v[3];
      return Rational(2) * P(i, n) * D(j, k, l, n) + P(j, i, n) * D(i, k, l, n) + P(k, i, n) * D(i, l, j, n) +
             P(l, i, n) * D(i, j, k, n);
    }
    case Family::pdi_op: {
      distinct(4);
      int i = v[0], j = v[1], k = v[2], l = v[3];
      return Rational(2) * D(j, k, l, n) * P(i, n) + D(i, k, l, n) * P(j, i, n) + D(i, l, j, n) * P(k, i, n) +
             D(i, j, k, n) * P(l, i, n);
    }
    case Family::pres_rank1: {
      need(1);
      if (v[0] < 1 || v[0] > 3) throw std::invalid_argument("pres_rank1 index is 1..3");
      return presentation_rank1(n).relations[static_cast<std::size_t>(v[0] - 1)];
    }
    default:
      return pentagon_relation(id);
  }
}

std::vector<RelationId> enumerate(Family f, int n) {
  check_rank_range(n);
  std::vector<RelationId> out;
  auto add = [&](std::vector<int> idx) { out.push_back({f, n, std::move(idx)}); };
  auto subs = subsets(n);
  switch (f) {
    case Family::central:
      for (auto I : subs)
        for (auto J : subs) {
          if (I == J) continue;
          bool proper_sub = (I & J) == I;
          bool disjoint = (I & J) == 0;
          if (proper_sub || (disjoint && I < J)) add({I, J});
        }
      break;
    case Family::decomposition:
      for (auto I : subs)
        for (auto J : subs)
          for (auto K : subs)
            if (I < J && J < K && !(I & J) && !(J & K) && !(I & K)) add({I, J, K});
      break;
    case Family::quad:
    case Family::quadB:
    case Family::d_cyclic:
      for (auto I : subs)
        for (auto J : subs)
          for (auto K : subs)
            if (!(I & J) && !(J & K) && !(I & K)) add({I, J, K});
      break;
    case Family::ddef:
      for (int j = 1; j <= n; ++j)
        for (int i = 1; i <= n; ++i)
          for (int k = i + 1; k <= n; ++k)
            if (i != j && k != j) add({i, j, k});
      break;
    case Family::inner_P:
      for (auto& t : distinct_tuples(n, 3)) add(t);
      break;
    case Family::outer_P:
    case Family::outer_lemma_c:
    case Family::dd:
    case Family::dd_op:
    case Family::pd_flip:
    case Family::pd_shift:
    case Family::pd_switch:
      for (auto& t : distinct_tuples(n, 4)) add(t);
      break;
    case Family::dd_one_overlap:
      for (auto& t : distinct_tuples(n, 5)) add(t);
      break;
    case Family::dd_disjoint: {
      auto triples = combinations(range1(n), 3);
      for (std::size_t a = 0; a < triples.size(); ++a)
        for (std::size_t b = a + 1; b < triples.size(); ++b) {
          const auto &x = triples[a], &y = triples[b];
          bool disj = std::none_of(x.begin(), x.end(),
                                   [&](int e) { return std::find(y.begin(), y.end(), e) != y.end(); });
          if (disj) add({x[0], x[1], x[2], y[0], y[1], y[2]});
        }
      break;
    }
    case Family::pdt:
    case Family::pdi:
    case Family::pdi_op:
      for (int l = 1; l <= n; ++l) {
        std::vector<int> rest;
        for (int x = 1; x <= n; ++x)
          if (x != l) rest.push_back(x);
        for (auto& t : combinations(rest, 3)) add({l, t[0], t[1], t[2]});
      }
      break;
    case Family::pd_pair:
      for (auto& kl : combinations(range1(n), 2)) {
        std::vector<int> rest;
        for (int x = 1; x <= n; ++x)
          if (x != kl[0] && x != kl[1]) rest.push_back(x);
        for (auto& ij : combinations(rest, 2)) add({ij[0], ij[1], kl[0], kl[1]});
      }
      break;
    case Family::pres_rank1:
      for (int k = 1; k <= 3; ++k) add({k});
      break;
    default:
      if (n != 4) break;
      if (f == Family::gamma_sum) {
        add({});
      } else if (f == Family::omega_central) {
        for (int i = 0; i < 5; ++i)
          for (int kind = 0; kind < 3; ++kind)
            for (int j = 0; j < 5; ++j)
              if (kind != 0 || j > i) add({i, kind, j});
      } else {
        for (int i = 0; i < 5; ++i) add({i});
      }
      break;
  }
  return out;
}

long expected_count(Family f, int n) {
  switch (f) {
    case Family::central: {
      long nested = 0;
      for (int k = 1; k <= n; ++k) nested += binom(n, k) * (ipow(2, k) - 2);
      return nested + (ipow(3, n) - 2 * ipow(2, n) + 1) / 2;
    }
    case Family::decomposition:
      return disjoint_triples(n);
    case Family::quad:
    case Family::quadB:
    case Family::d_cyclic:
      return 6 * disjoint_triples(n);
    case Family::ddef:
      return n * binom(n - 1, 2);
    case Family::inner_P:
      return falling(n, 3);
    case Family::outer_P:
    case Family::outer_lemma_c:
    case Family::dd:
    case Family::dd_op:
    case Family::pd_flip:
    case Family::pd_shift:
    case Family::pd_switch:
      return falling(n, 4);
    case Family::dd_one_overlap:
      return falling(n, 5);
    case Family::dd_disjoint:
      return binom(n, 3) * binom(n - 3, 3) / 2;
    case Family::pdt:
    case Family::pdi:
    case Family::pdi_op:
      return n * binom(n - 1, 3);
    case Family::pd_pair:
      return binom(n, 2) * binom(n - 2, 2);
    case Family::pres_rank1:
      return 3;
    case Family::gamma_sum:
      return n == 4 ? 1 : 0;
    case Family::omega_central:
      return n == 4 ? 10 + 25 + 25 : 0;
    default:
      return n == 4 ? 5 : 0;
  }
}

// ---- Casimirs and the rank-1 presentation ---------------------------------------

NCPoly casimir_rank1(int n) {
  check_rank_range(n);
  NCPoly C1 = C(bit(1), n), C2 = C(bit(2), n), C3 = C(bit(3), n);
  NCPoly C12 = C(index_mask({1, 2}), n), C23 = C(index_mask({2, 3}), n), C123 = C(index_mask({1, 2, 3}), n);
  NCPoly Dl = NCPoly::gen(GeneratorId::D(1, 2, 3).second, n);
  NCPoly ac = anticommutator(C12, C23);
  return Dl * Dl - kHalf * anticommutator(C12 * C12, C23) - kHalf * anticommutator(C23 * C23, C12) + C12 * C12 +
         C23 * C23 + ac + kHalf * (C1 + C2 + C3 + C123) * (ac - Rational(2) * C12 - Rational(2) * C23) +
         (C2 - C3) * (C123 - C1) * C12 + (C2 - C1) * (C123 - C3) * C23 + (C1 + C3) * (C123 + C2) +
         (C1 * C3 - C123 * C2) * (C123 - C1 + C2 - C3);
}

NCPoly casimir_frak(int i) {
  NCPoly G = Ga(i), Op = Om(i + 2), Omi = Om(i - 2), Oi = Om(i);
  NCPoly wm = om(i - 1), w = om(i), wp = om(i + 1);
  NCPoly ac = anticommutator(Op, Omi);
  return G * G - kHalf * anticommutator(Op * Op, Omi) - kHalf * anticommutator(Omi * Omi, Op) + Op * Op +
         Omi * Omi + ac + kHalf * (wm + w + wp + Oi) * (ac - Rational(2) * Op - Rational(2) * Omi) +
         (w - wp) * (Oi - wm) * Op + (w - wm) * (Oi - wp) * Omi + (wm + wp) * (Oi + w) +
         (wm * wp - Oi * w) * (Oi - wm + w - wp);
}

Rank1Presentation presentation_rank1(int n) {
  check_rank_range(n);
  NCPoly C1 = C(bit(1), n), C2 = C(bit(2), n), C3 = C(bit(3), n), C123 = C(index_mask({1, 2, 3}), n);
  NCPoly A = C(index_mask({2, 3}), n), B = C(index_mask({1, 2}), n);
  // 1/2[C23, C12] = -D_123.
  NCPoly Dp = -NCPoly::gen(GeneratorId::D(1, 2, 3).second, n);
  Rank1PresentationParams par{(C2 - C3) * (C1 - C123), (C1 - C2) * (C3 - C123), C123 + C1 + C2 + C3};
  Rank1Presentation out{{}, par, A, B, Dp};
  out.relations.push_back(commutator(A, B) - Rational(2) * Dp);
  out.relations.push_back(commutator(A, Dp) - (anticommutator(A, B) + A * A - par.delta * A + par.alpha));
  out.relations.push_back(commutator(Dp, B) - (anticommutator(A, B) + B * B - par.delta * B - par.beta));
  return out;
}

}  // namespace racah
