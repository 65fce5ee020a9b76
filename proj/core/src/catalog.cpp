#include <algorithm>
#include <bit>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "racah/relations.hpp"

namespace racah {

namespace {

NCPoly P(int i, int j, int n) { return gen_P(i, j, n); }
NCPoly P(int i, int n) { return gen_P(i, i, n); }
NCPoly D(int i, int j, int k, int n) { return D_of(i, j, k, n); }

int only(std::uint16_t mask) { return std::countr_zero(mask); }

// Sign s with D_{ijk} = s * D_sorted.
int dsign(int i, int j, int k) { return GeneratorId::D(i, j, k).first; }

std::optional<NCPoly> pd(const GeneratorId& p, const GeneratorId& d, int n) {
  if (p.is_central_P()) return NCPoly(n);
  std::uint16_t a = p.mask(), m = d.mask();
  std::uint16_t sh = a & m;
  int shared = std::popcount(sh);
  if (shared == 0) return NCPoly(n);
  if (shared == 2) {
    auto jk = p.indices();
    int j = jk[0], k = jk[1], i = only(static_cast<std::uint16_t>(m & ~a));
    NCPoly r = (P(j, k, n) - Rational(2) * P(j, n)) * P(k, i, n) - P(i, j, n) * (P(j, k, n) - Rational(2) * P(k, n));
    return Rational(dsign(i, j, k)) * r;
  }
  int j = only(sh), i = only(static_cast<std::uint16_t>(a & ~sh));
  auto kl = mask_indices(static_cast<std::uint16_t>(m & ~sh));
  int k = kl[0], l = kl[1];
  return Rational(dsign(j, k, l)) * (P(i, l, n) * P(j, k, n) - P(j, l, n) * P(i, k, n));
}

std::optional<NCPoly> dd(const GeneratorId& x, const GeneratorId& y, int n) {
  std::uint16_t a = x.mask(), b = y.mask(), sh = a & b;
  int shared = std::popcount(sh);
  if (shared == 0 || shared == 3) return NCPoly(n);
  if (shared == 2) {
    auto jk = mask_indices(sh);
    int j = jk[0], k = jk[1];
    int i = only(static_cast<std::uint16_t>(a & ~sh)), l = only(static_cast<std::uint16_t>(b & ~sh));
    Rational s(dsign(i, j, k) * dsign(j, k, l));
    return s * (P(j, k, n) * (D(j, i, l, n) + D(i, l, k, n)));
  }
  int k = only(sh);
  auto ij = mask_indices(static_cast<std::uint16_t>(a & ~sh));
  auto lm = mask_indices(static_cast<std::uint16_t>(b & ~sh));
  int i = ij[0], j = ij[1], l = lm[0], m = lm[1];
  Rational s(dsign(i, j, k) * dsign(k, l, m));
  return s * (P(j, k, n) * D(l, m, i, n) - P(k, i, n) * D(j, l, m, n));
}

void check_core(const GeneratorId& g, int n) {
  if (g.kind() != Kind::P && g.kind() != Kind::D)
    throw std::invalid_argument("catalog commutators are defined on P and D letters, got " + g.name());
  if (g.max_index() > n) throw std::out_of_range(g.name() + " exceeds rank " + std::to_string(n));
}

NCPoly pdt_poly(int l, int i, int j, int k, int n) {
  return P(i, l, n) * D(l, j, k, n) + P(j, l, n) * D(l, k, i, n) + P(k, l, n) * D(l, i, j, n) +
         Rational(2) * P(l, n) * D(i, j, k, n);
}

Word lead_word(const NCPoly& p, const RewriteSystem& rs) {
  Word best;
  Measure top;
  bool any = false;
  for (const auto& [w, c] : p.terms()) {
    Measure m = rs.measure(w);
    if (!any || top < m) {
      top = std::move(m);
      best = w;
      any = true;
    }
  }
  return best;
}

}  // namespace

std::optional<NCPoly> catalog_commutator(const GeneratorId& x, const GeneratorId& y, int n, bool dd_catalog) {
  check_core(x, n);
  check_core(y, n);
  if (x.kind() == Kind::P && y.kind() == Kind::P) {
    if (x.is_central_P() || y.is_central_P()) return NCPoly(n);
    std::uint16_t sh = x.mask() & y.mask();
    if (std::popcount(sh) != 1) return NCPoly(n);
    int j = only(sh);
    int i = only(static_cast<std::uint16_t>(x.mask() & ~sh)), k = only(static_cast<std::uint16_t>(y.mask() & ~sh));
    return Rational(2) * D(i, j, k, n);
  }
  if (x.kind() == Kind::P) return pd(x, y, n);
  if (y.kind() == Kind::P) return -*pd(y, x, n);
  if (!dd_catalog) return std::nullopt;
  return dd(x, y, n);
}

RewriteSystem build_rewrite_system(int n, const SystemOptions& opt) {
  if (n < 3 || n > kMaxRank) throw std::invalid_argument("rank n must lie in 3..9");
  RewriteSystem rs(n);
  std::vector<GeneratorId> pairs, triples;
  for (int i = 1; i <= n; ++i) rs.add_letter(GeneratorId::P(i), 1, true);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      pairs.push_back(GeneratorId::P(i, j));
      rs.add_letter(pairs.back(), 1);
    }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) {
        triples.push_back(GeneratorId::D(i, j, k).second);
        rs.add_letter(triples.back(), 2);
      }

  // C_I in terms of P's.
  for (std::uint16_t m = 2; m < (1u << (n + 1)); m = static_cast<std::uint16_t>(m + 2)) {
    NCPoly e(n);
    auto idx = mask_indices(m);
    for (std::size_t a = 0; a < idx.size(); ++a)
      for (std::size_t b = a + 1; b < idx.size(); ++b) e += P(idx[a], idx[b], n);
    for (int i : idx) e -= P(i, n);
    rs.add_substitution(GeneratorId::C_mask(m), std::move(e));
  }

  const auto& alpha = rs.alphabet();
  for (const auto& x : alpha)
    for (const auto& y : alpha) {
      if (!(y < x)) continue;
      auto c = catalog_commutator(x, y, n, opt.dd_catalog);
      if (!c) continue;
      NCPoly rhs = NCPoly::word({y, x}, n) + *c;
      rs.add_rule({{x, y}, std::move(rhs), {}, false});
    }

  std::vector<NCPoly> pdts;
  if (opt.pdt || opt.derived) {
    for (int l = 1; l <= n; ++l)
      for (const auto& t : triples) {
        auto ijk = t.indices();
        if (std::find(ijk.begin(), ijk.end(), l) != ijk.end()) continue;
        int i = ijk[0], j = ijk[1], k = ijk[2];
        pdts.push_back(pdt_poly(l, i, j, k, n));
        if (!opt.pdt) continue;
        NCPoly rhs = Rational(-1, 2) * (P(i, l, n) * D(l, j, k, n) + P(j, l, n) * D(l, k, i, n) +
                                        P(k, l, n) * D(l, i, j, n));
        rs.add_rule({{GeneratorId::P(l), t}, std::move(rhs), {}, true});
      }
  }

  if (n == 4) {
    for (int i = 0; i < 5; ++i) {
      rs.add_substitution(GeneratorId::pentagon(Kind::Omega, i),
                          NCPoly::gen(pentagon_C(Kind::Omega, i), 4));
      rs.add_substitution(GeneratorId::pentagon(Kind::omega, i),
                          NCPoly::gen(pentagon_C(Kind::omega, i), 4));
    }
    for (int i = 0; i < 5; ++i)
      rs.add_substitution(GeneratorId::pentagon(Kind::Gamma, i), pentagon_assign(Kind::Gamma, i));
  }

  if (opt.derived) {
    // Consequences of PDT under commutation with each P_ab, oriented by the
    // measure and added one at a time.
    std::vector<NCPoly> rels;
    {
      Reducer base(rs);
      for (const auto& t : pdts)
        for (const auto& g : pairs) {
          NCPoly r = base.reduce(commutator(NCPoly::gen(g, n), t));
          if (!r.is_zero()) rels.push_back(std::move(r));
        }
    }
    auto reducer = std::make_unique<Reducer>(rs);
    for (const auto& rel : rels) {
      NCPoly r = reducer->reduce(rel);
      if (r.is_zero()) continue;
      Word lead = lead_word(r, rs);
      Rational c = r.coeff(lead);
      NCPoly rest = r - NCPoly::word(lead, n, c);
      rest *= Rational(-1) / c;
      rs.add_rule({lead, std::move(rest), {}, false});
      reducer = std::make_unique<Reducer>(rs);
    }
  }
  return rs;
}

const RewriteSystem& default_system(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<RewriteSystem>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<RewriteSystem>(build_rewrite_system(n));
  return *slot;
}

NCPoly catalog_jacobi_defect(const GeneratorId& a, const GeneratorId& b, const GeneratorId& c, int n) {
  auto cat = [n](const GeneratorId& x, const GeneratorId& y) {
    auto v = catalog_commutator(x, y, n);
    return v ? *v : NCPoly(n);
  };
  NCPoly A = NCPoly::gen(a, n), B = NCPoly::gen(b, n), Cc = NCPoly::gen(c, n);
  return commutator(A, cat(b, c)) + commutator(B, cat(c, a)) + commutator(Cc, cat(a, b));
}

}  // namespace racah
