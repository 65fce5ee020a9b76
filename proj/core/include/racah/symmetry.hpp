#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "racah/ncpoly.hpp"
#include "racah/relations.hpp"

namespace racah {

// Permutation of the five pentagon points 0..4. C_I with |I| <= 2 sits on the
// point set I, larger I on the complement of I in {0..4}; so Omega_i is the
// edge {i+2, i+3} and omega_i the point {i}. P4 fixes point 0.
using PointPerm = std::array<int, 5>;

// x -> x + rotation, or x -> 2*axis - x when reflected.
struct DihedralElement {
  int rotation = 0;
  bool reflected = false;
  int axis = 0;

  static DihedralElement rotate(int k) { return {((k % 5) + 5) % 5, false, 0}; }
  static DihedralElement reflect(int axis) { return {0, true, ((axis % 5) + 5) % 5}; }
  static std::vector<DihedralElement> all();

  int apply_label(int i) const;
  int gamma_sign() const { return reflected ? -1 : 1; }
  // (this * other)(x) = this(other(x)).
  DihedralElement compose(const DihedralElement& other) const;
  DihedralElement inverse() const;
  PointPerm points() const;
  std::string str() const;

  friend bool operator==(const DihedralElement& a, const DihedralElement& b) {
    return a.points() == b.points();
  }
};

// sigma[i-1] is the image of index i.
struct IndexPermutation {
  std::array<int, 4> sigma{1, 2, 3, 4};

  static std::vector<IndexPermutation> all();
  static IndexPermutation transposition(int a, int b);
  int apply(int i) const { return sigma[static_cast<std::size_t>(i - 1)]; }
  PointPerm points() const;
  std::string str() const;
};

GeneratorId act_on_C(const PointPerm& g, const GeneratorId& c);

// Pentagon letters map by label (Gamma picks up the reflection sign); C
// letters go through the point picture; P and D are expanded into C's first.
NCPoly act_dihedral(const DihedralElement& g, const NCPoly& p);
// Relabels C, P and D indices (D with the parity sign). Pentagon letters are
// rewritten as C's first.
NCPoly act_permutation(const IndexPermutation& s, const NCPoly& p);
// Any point permutation, on the C alphabet.
NCPoly act_points(const PointPerm& g, const NCPoly& p);

enum class Group { D5, P4, All };
Group group_from_name(const std::string& s);
std::string group_name(Group g);

// Closure of the group generators acting on the 15 C's.
std::vector<PointPerm> group_elements(Group g);
std::size_t closure_order(Group g);
std::vector<std::string> generating_set(Group g);

// Distinct images of p (up to an overall sign) under the chosen group.
std::vector<NCPoly> orbit(const NCPoly& p, Group g);

struct InvarianceRecord {
  std::string element;  // group element
  RelationId source;
  bool matched = false;  // image equals +-another instance
  RelationId target{};
  int sign = 0;
  bool reduced = false;  // otherwise: image reduced to zero
  bool ok() const { return matched || reduced; }
};

// For every group element and relation, the image is matched against the
// suite (as written, or after expansion to C's) and otherwise reduced.
std::vector<InvarianceRecord> verify_relation_invariance(Group g, const std::vector<RelationId>& suite);

// The rank-4 pentagon relations: gamma_def, gamma_sum, omega_commute,
// omega_gamma_commute, omega_inner(_mirror), omega_outer(_mirror), omega_central.
std::vector<RelationId> pentagon_suite();

}  // namespace racah
