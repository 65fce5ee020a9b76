#include "racah/symmetry.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <stdexcept>

namespace racah {

namespace {

int mod5(int x) { return ((x % 5) + 5) % 5; }

// Point set (bits 0..4) of a C letter and back.
std::uint8_t c_to_points(std::uint16_t mask) {
  if (std::popcount(mask) <= 2) return static_cast<std::uint8_t>(mask & 0x1f);
  return static_cast<std::uint8_t>(~mask & 0x1f);
}

std::uint16_t points_to_c(std::uint8_t pts) {
  if (!(pts & 1)) return pts;
  return static_cast<std::uint16_t>(~pts & 0x1e);
}

PointPerm compose(const PointPerm& a, const PointPerm& b) {
  PointPerm r{};
  for (int x = 0; x < 5; ++x) r[static_cast<std::size_t>(x)] = a[static_cast<std::size_t>(b[static_cast<std::size_t>(x)])];
  return r;
}

const PointPerm kIdentity{0, 1, 2, 3, 4};

std::vector<PointPerm> generators(Group g) {
  std::vector<PointPerm> gens;
  if (g != Group::P4) {
    gens.push_back(DihedralElement::rotate(1).points());
    gens.push_back(DihedralElement::reflect(0).points());
  }
  if (g != Group::D5) {
    gens.push_back(IndexPermutation::transposition(1, 2).points());
    gens.push_back(IndexPermutation{{2, 3, 4, 1}}.points());
  }
  return gens;
}

// The 15 C masks in a fixed order.
const std::vector<std::uint16_t>& c_masks() {
  static const std::vector<std::uint16_t> masks = [] {
    std::vector<std::uint16_t> v;
    for (std::uint16_t m = 2; m < 32; m = static_cast<std::uint16_t>(m + 2)) v.push_back(m);
    return v;
  }();
  return masks;
}

std::vector<int> induced_on_C(const PointPerm& g) {
  const auto& ms = c_masks();
  std::vector<int> out;
  for (auto m : ms) {
    auto img = act_on_C(g, GeneratorId::C_mask(m)).mask();
    out.push_back(static_cast<int>(std::find(ms.begin(), ms.end(), img) - ms.begin()));
  }
  return out;
}

DihedralElement as_dihedral(const PointPerm& p) {
  for (const auto& d : DihedralElement::all())
    if (d.points() == p) return d;
  throw std::invalid_argument("not a dihedral point permutation");
}

IndexPermutation as_index_perm(const PointPerm& p) {
  if (p[0] != 0) throw std::invalid_argument("permutation does not fix point 0");
  return IndexPermutation{{p[1], p[2], p[3], p[4]}};
}

std::string perm_str(const PointPerm& p) {
  std::ostringstream os;
  os << '(';
  for (int x = 0; x < 5; ++x) os << (x ? " " : "") << p[static_cast<std::size_t>(x)];
  os << ')';
  return os.str();
}

}  // namespace

std::vector<DihedralElement> DihedralElement::all() {
  std::vector<DihedralElement> v;
  for (int k = 0; k < 5; ++k) v.push_back(rotate(k));
  for (int a = 0; a < 5; ++a) v.push_back(reflect(a));
  return v;
}

int DihedralElement::apply_label(int i) const { return reflected ? mod5(2 * axis - i) : mod5(i + rotation); }

PointPerm DihedralElement::points() const {
  PointPerm p{};
  for (int x = 0; x < 5; ++x) p[static_cast<std::size_t>(x)] = apply_label(x);
  return p;
}

DihedralElement DihedralElement::compose(const DihedralElement& other) const {
  return as_dihedral(racah::compose(points(), other.points()));
}

DihedralElement DihedralElement::inverse() const { return reflected ? *this : rotate(-rotation); }

std::string DihedralElement::str() const {
  return reflected ? "reflect(" + std::to_string(axis) + ")" : "rotate(" + std::to_string(rotation) + ")";
}

std::vector<IndexPermutation> IndexPermutation::all() {
  std::vector<IndexPermutation> v;
  IndexPermutation p;
  do v.push_back(p);
  while (std::next_permutation(p.sigma.begin(), p.sigma.end()));
  return v;
}

IndexPermutation IndexPermutation::transposition(int a, int b) {
  IndexPermutation p;
  std::swap(p.sigma[static_cast<std::size_t>(a - 1)], p.sigma[static_cast<std::size_t>(b - 1)]);
  return p;
}

PointPerm IndexPermutation::points() const { return {0, sigma[0], sigma[1], sigma[2], sigma[3]}; }

std::string IndexPermutation::str() const {
  std::ostringstream os;
  os << "perm(" << sigma[0] << sigma[1] << sigma[2] << sigma[3] << ')';
  return os.str();
}

GeneratorId act_on_C(const PointPerm& g, const GeneratorId& c) {
  if (c.kind() != Kind::C || c.max_index() > 4) throw std::invalid_argument("point action needs a C letter over 1..4");
  std::uint8_t pts = c_to_points(c.mask()), img = 0;
  for (int x = 0; x < 5; ++x)
    if (pts & (1u << x)) img = static_cast<std::uint8_t>(img | (1u << g[static_cast<std::size_t>(x)]));
  return GeneratorId::C_mask(points_to_c(img));
}

NCPoly act_points(const PointPerm& g, const NCPoly& p) {
  if (p.rank() != 4) throw std::invalid_argument("the pentagon action needs rank 4");
  NCPoly c = expand_to_C(p);
  return substitute(c, [&](const GeneratorId& x) { return NCPoly::gen(act_on_C(g, x), 4); }, 4);
}

NCPoly act_dihedral(const DihedralElement& g, const NCPoly& p) {
  if (p.rank() != 4) throw std::invalid_argument("the pentagon action needs rank 4");
  const PointPerm pts = g.points();
  return substitute(
      p,
      [&](const GeneratorId& x) -> NCPoly {
        switch (x.kind()) {
          case Kind::Omega:
            return Om(g.apply_label(x.label()));
          case Kind::omega:
            return om(g.apply_label(x.label()));
          case Kind::Gamma:
            return Rational(g.gamma_sign()) * Ga(g.apply_label(x.label()));
          case Kind::C:
            return NCPoly::gen(act_on_C(pts, x), 4);
          default:
            return act_points(pts, NCPoly::gen(x, 4));
        }
      },
      4);
}

NCPoly act_permutation(const IndexPermutation& s, const NCPoly& p) {
  const int n = p.rank();
  auto img = [&](int i) { return i <= 4 ? s.apply(i) : i; };
  return substitute(
      p,
      [&](const GeneratorId& x) -> NCPoly {
        auto idx = x.indices();
        switch (x.kind()) {
          case Kind::C: {
            std::vector<int> out;
            for (int i : idx) out.push_back(img(i));
            return gen_C(out, n);
          }
          case Kind::P:
            return idx.size() == 1 ? gen_P(img(idx[0]), img(idx[0]), n) : gen_P(img(idx[0]), img(idx[1]), n);
          case Kind::D:
            return D_of(img(idx[0]), img(idx[1]), img(idx[2]), n);
          default:
            return act_permutation(s, expand_to_C(NCPoly::gen(x, n)));
        }
      },
      n);
}

Group group_from_name(const std::string& s) {
  if (s == "d5") return Group::D5;
  if (s == "p4") return Group::P4;
  if (s == "all") return Group::All;
  throw std::invalid_argument("unknown group '" + s + "' (expected d5, p4 or all)");
}

std::string group_name(Group g) {
  switch (g) {
    case Group::D5:
      return "d5";
    case Group::P4:
      return "p4";
    default:
      return "all";
  }
}

std::vector<PointPerm> group_elements(Group g) {
  auto gens = generators(g);
  std::vector<PointPerm> out{kIdentity};
  std::set<PointPerm> seen{kIdentity};
  for (std::size_t k = 0; k < out.size(); ++k)
    for (const auto& s : gens) {
      PointPerm next = compose(s, out[k]);
      if (seen.insert(next).second) out.push_back(next);
    }
  return out;
}

std::size_t closure_order(Group g) {
  // Closure computed on the induced permutations of the 15 C's.
  std::vector<std::vector<int>> gens;
  for (const auto& s : generators(g)) gens.push_back(induced_on_C(s));
  std::vector<int> id(15);
  for (int i = 0; i < 15; ++i) id[static_cast<std::size_t>(i)] = i;
  std::set<std::vector<int>> seen{id};
  std::deque<std::vector<int>> queue{id};
  while (!queue.empty()) {
    auto cur = queue.front();
    queue.pop_front();
    for (const auto& s : gens) {
      std::vector<int> next(15);
      for (std::size_t i = 0; i < 15; ++i) next[i] = s[static_cast<std::size_t>(cur[i])];
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  return seen.size();
}

std::vector<std::string> generating_set(Group g) {
  std::vector<std::string> out;
  if (g != Group::P4) {
    out.push_back(DihedralElement::rotate(1).str() + " " + perm_str(DihedralElement::rotate(1).points()));
    out.push_back(DihedralElement::reflect(0).str() + " " + perm_str(DihedralElement::reflect(0).points()));
  }
  if (g != Group::D5) {
    auto t = IndexPermutation::transposition(1, 2);
    IndexPermutation c{{2, 3, 4, 1}};
    out.push_back(t.str() + " " + perm_str(t.points()));
    out.push_back(c.str() + " " + perm_str(c.points()));
  }
  return out;
}

namespace {

NCPoly act_element(Group g, const PointPerm& e, const NCPoly& p) {
  switch (g) {
    case Group::D5:
      return act_dihedral(as_dihedral(e), p);
    case Group::P4:
      return act_permutation(as_index_perm(e), p);
    default:
      return act_points(e, p);
  }
}

std::string element_name(Group g, const PointPerm& e) {
  switch (g) {
    case Group::D5:
      return as_dihedral(e).str();
    case Group::P4:
      return as_index_perm(e).str();
    default:
      return "points" + perm_str(e);
  }
}

}  // namespace

std::vector<NCPoly> orbit(const NCPoly& p, Group g) {
  std::vector<NCPoly> out;
  std::set<std::string> seen;
  for (const auto& e : group_elements(g)) {
    NCPoly img = act_element(g, e, p);
    if (seen.contains(img.str()) || seen.contains((-img).str())) continue;
    seen.insert(img.str());
    out.push_back(std::move(img));
  }
  return out;
}

std::vector<RelationId> pentagon_suite() {
  std::vector<RelationId> out;
  for (Family f : {Family::gamma_def, Family::gamma_sum, Family::omega_central, Family::omega_commute,
                   Family::omega_gamma_commute, Family::omega_inner, Family::omega_inner_mirror, Family::omega_outer,
                   Family::omega_outer_mirror}) {
    auto ids = enumerate(f, 4);
    out.insert(out.end(), ids.begin(), ids.end());
  }
  return out;
}

std::vector<InvarianceRecord> verify_relation_invariance(Group g, const std::vector<RelationId>& suite) {
  std::map<std::string, std::pair<std::size_t, int>> as_written, as_c;
  for (std::size_t k = 0; k < suite.size(); ++k) {
    NCPoly r = relation(suite[k]);
    NCPoly rc = expand_to_C(r);
    as_written.emplace(r.str(), std::make_pair(k, 1));
    as_written.emplace((-r).str(), std::make_pair(k, -1));
    as_c.emplace(rc.str(), std::make_pair(k, 1));
    as_c.emplace((-rc).str(), std::make_pair(k, -1));
  }
  std::vector<InvarianceRecord> out;
  std::map<int, std::unique_ptr<Reducer>> reducers;
  for (const auto& e : group_elements(g))
    for (const auto& id : suite) {
      InvarianceRecord rec;
      rec.element = element_name(g, e);
      rec.source = id;
      NCPoly img = act_element(g, e, relation(id));
      auto it = as_written.find(img.str());
      if (it == as_written.end()) it = as_c.find(expand_to_C(img).str());
      if (it != as_c.end() && it != as_written.end()) {
        rec.matched = true;
        rec.target = suite[it->second.first];
        rec.sign = it->second.second;
      } else {
        auto& red = reducers[img.rank()];
        if (!red) red = std::make_unique<Reducer>(default_system(img.rank()));
        rec.reduced = red->reduce(img).is_zero();
      }
      out.push_back(std::move(rec));
    }
  return out;
}

}  // namespace racah
