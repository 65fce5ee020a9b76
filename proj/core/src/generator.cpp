#include "racah/generator.hpp"

#include <bit>
#include <stdexcept>

namespace racah {

namespace {

void check_index(int i) {
  if (i < 1 || i > kMaxRank) throw std::out_of_range("generator index out of range: " + std::to_string(i));
}

// Sorted indices packed as left-aligned hex digits; shorter tuples that are a
// prefix of longer ones compare smaller, which gives lexicographic order.
std::uint64_t lex_key(std::uint16_t mask) {
  std::uint64_t key = 0;
  int shift = 44;
  for (int i = 1; i <= kMaxRank; ++i) {
    if (mask & (1u << i)) {
      key |= static_cast<std::uint64_t>(i) << shift;
      shift -= 4;
    }
  }
  return key;
}

}  // namespace

std::uint16_t index_mask(std::initializer_list<int> indices) {
  return index_mask(std::vector<int>(indices));
}

std::uint16_t index_mask(const std::vector<int>& indices) {
  std::uint16_t m = 0;
  for (int i : indices) {
    check_index(i);
    m |= static_cast<std::uint16_t>(1u << i);
  }
  return m;
}

std::vector<int> mask_indices(std::uint16_t mask) {
  std::vector<int> out;
  for (int i = 1; i <= kMaxRank; ++i)
    if (mask & (1u << i)) out.push_back(i);
  return out;
}

int permutation_sign(std::vector<int> v) {
  int sign = 1;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j + 1 < v.size() - i; ++j) {
      if (v[j] == v[j + 1]) return 0;
      if (v[j] > v[j + 1]) {
        std::swap(v[j], v[j + 1]);
        sign = -sign;
      }
    }
  for (std::size_t i = 0; i + 1 < v.size(); ++i)
    if (v[i] == v[i + 1]) return 0;
  return sign;
}

GeneratorId::GeneratorId(Kind kind, std::uint16_t mask) : kind_(kind), mask_(mask) {
  std::uint64_t payload = is_pentagon() ? mask : lex_key(mask);
  key_ = (static_cast<std::uint64_t>(kind) << 56) | payload;
}

GeneratorId GeneratorId::C(std::initializer_list<int> indices) {
  if (indices.size() == 0) throw std::invalid_argument("C needs a nonempty index set");
  return C_mask(index_mask(indices));
}

GeneratorId GeneratorId::C_mask(std::uint16_t mask) {
  if (mask == 0 || (mask & 1u) || mask >= (1u << (kMaxRank + 1)))
    throw std::invalid_argument("C needs a nonempty index set within 1..9");
  return GeneratorId(Kind::C, mask);
}

GeneratorId GeneratorId::P(int i, int j) {
  check_index(i);
  check_index(j);
  return GeneratorId(Kind::P, static_cast<std::uint16_t>((1u << i) | (1u << j)));
}

std::pair<int, GeneratorId> GeneratorId::D(int i, int j, int k) {
  check_index(i);
  check_index(j);
  check_index(k);
  int sign = permutation_sign({i, j, k});
  if (sign == 0) throw std::invalid_argument("D needs three distinct indices");
  return {sign, GeneratorId(Kind::D, index_mask({i, j, k}))};
}

GeneratorId GeneratorId::pentagon(Kind kind, int label) {
  if (kind < Kind::Omega) throw std::invalid_argument("not a pentagon kind");
  int r = ((label % 5) + 5) % 5;
  return GeneratorId(kind, static_cast<std::uint16_t>(r));
}

std::vector<int> GeneratorId::indices() const {
  if (is_pentagon()) return {static_cast<int>(mask_)};
  return mask_indices(mask_);
}

int GeneratorId::size() const { return is_pentagon() ? 1 : std::popcount(mask_); }

int GeneratorId::max_index() const {
  if (is_pentagon()) return 4;
  return std::bit_width(static_cast<unsigned>(mask_)) - 1;
}

std::string GeneratorId::name() const {
  std::string out;
  switch (kind_) {
    case Kind::P: out = "P"; break;
    case Kind::D: out = "D"; break;
    case Kind::C: out = "C"; break;
    case Kind::Omega: return "Om" + std::to_string(mask_);
    case Kind::omega: return "om" + std::to_string(mask_);
    case Kind::Gamma: return "Ga" + std::to_string(mask_);
  }
  for (int i : mask_indices(mask_)) out += static_cast<char>('0' + i);
  return out;
}

std::string word_name(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += '*';
    out += w[i].name();
  }
  return out;
}

}  // namespace racah
