#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace racah {

// Index payloads are single digits in the text grammar, so ranks stop at 9.
inline constexpr int kMaxRank = 9;

enum class Kind : std::uint8_t { P, D, C, Omega, omega, Gamma };

// A canonical generator symbol. C, P and D carry a bitmask of indices
// (bit i set for index i); the pentagon kinds carry a label in 0..4.
// D is always stored with sorted indices; the permutation sign of the
// original ordering is returned separately by make_D.
class GeneratorId {
 public:
  GeneratorId() = default;

  static GeneratorId C(std::initializer_list<int> indices);
  static GeneratorId C_mask(std::uint16_t mask);
  static GeneratorId P(int i, int j);
  static GeneratorId P(int i) { return P(i, i); }
  static std::pair<int, GeneratorId> D(int i, int j, int k);
  static GeneratorId pentagon(Kind kind, int label);

  Kind kind() const { return kind_; }
  std::uint16_t mask() const { return mask_; }
  int label() const { return mask_; }
  std::vector<int> indices() const;
  int size() const;  // number of indices for C/P/D
  int max_index() const;
  bool is_pentagon() const { return kind_ >= Kind::Omega; }
  bool is_central_P() const { return kind_ == Kind::P && size() == 1; }

  std::string name() const;

  friend bool operator==(const GeneratorId& a, const GeneratorId& b) {
    return a.kind_ == b.kind_ && a.mask_ == b.mask_;
  }
  // Generator order: P before D before C before the pentagon kinds; within a
  // kind, lexicographic on the sorted index tuple (so P1 < P12 < P13 < P2).
  friend std::strong_ordering operator<=>(const GeneratorId& a, const GeneratorId& b) {
    return a.key_ <=> b.key_;
  }

  std::size_t hash() const { return static_cast<std::size_t>(key_); }

 private:
  GeneratorId(Kind kind, std::uint16_t mask);

  Kind kind_ = Kind::P;
  std::uint16_t mask_ = 0;
  std::uint64_t key_ = 0;
};

using Word = std::vector<GeneratorId>;

struct WordHash {
  std::size_t operator()(const Word& w) const {
    std::size_t h = 1469598103934665603ULL;
    for (const auto& g : w) h = (h ^ g.hash()) * 1099511628211ULL;
    return h;
  }
};

std::string word_name(const Word& w);

// Sign of the permutation sorting a short index list (0 if an index repeats).
int permutation_sign(std::vector<int> v);

std::uint16_t index_mask(std::initializer_list<int> indices);
std::uint16_t index_mask(const std::vector<int>& indices);
std::vector<int> mask_indices(std::uint16_t mask);

}  // namespace racah

template <>
struct std::hash<racah::GeneratorId> {
  std::size_t operator()(const racah::GeneratorId& g) const { return g.hash(); }
};
