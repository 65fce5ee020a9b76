#include "racah/expr.hpp"

#include <bit>
#include <cctype>

namespace racah {

namespace {

class Parser {
 public:
  Parser(std::string_view s, int rank) : s_(s), rank_(rank) {}

  NCPoly run() {
    NCPoly p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }

  NCPoly expr() {
    NCPoly acc = term();
    for (;;) {
      if (eat('+')) acc += term();
      else if (eat('-')) acc -= term();
      else return acc;
    }
  }

  NCPoly term() {
    bool neg = eat('-');
    NCPoly acc = factor();
    while (eat('*')) acc = acc * factor();
    return neg ? -acc : acc;
  }

  NCPoly factor() {
    NCPoly base = atom();
    if (eat('^')) {
      skip();
      std::string digits = read_digits();
      if (digits.empty()) fail("expected integer exponent");
      base = base.pow(std::stoi(digits));
    }
    return base;
  }

  std::string read_digits() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  NCPoly atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of expression");
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = read_digits();
      if (pos_ < s_.size() && (s_[pos_] == '.' || s_[pos_] == 'e' || s_[pos_] == 'E'))
        fail("decimal literals are not accepted; write p/q");
      std::string lit = num;
      skip();
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        skip();
        std::string den = read_digits();
        if (den.empty()) fail("expected denominator");
        if (pos_ < s_.size() && s_[pos_] == '.') fail("decimal literals are not accepted; write p/q");
        lit += "/" + den;
      }
      try {
        return NCPoly::constant(Rational::parse(lit), rank_);
      } catch (const std::exception& e) {
        fail(e.what());
      }
    }
    if (c == '(') {
      ++pos_;
      NCPoly p = expr();
      expect(')');
      return p;
    }
    if (c == '[' || c == '{') {
      ++pos_;
      NCPoly a = expr();
      expect(',');
      NCPoly b = expr();
      expect(c == '[' ? ']' : '}');
      return c == '[' ? commutator(a, b) : anticommutator(a, b);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      std::string_view ident = s_.substr(start, pos_ - start);
      int sign = 1;
      GeneratorId g;
      try {
        g = parse_generator(ident, rank_, &sign);
      } catch (const ParseError&) {
        throw;
      } catch (const std::exception& e) {
        pos_ = start;
        fail(e.what());
      }
      return NCPoly::gen(g, rank_, sign);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  int rank_;
  std::size_t pos_ = 0;
};

std::vector<int> digits_of(std::string_view s) {
  std::vector<int> out;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) throw std::invalid_argument("bad index digit");
    out.push_back(c - '0');
  }
  return out;
}

}  // namespace

GeneratorId parse_generator(std::string_view ident, int rank, int* sign) {
  if (sign) *sign = 1;
  auto in_range = [&](const std::vector<int>& idx) {
    for (int i : idx)
      if (i < 1 || i > rank)
        throw std::out_of_range("index " + std::to_string(i) + " outside 1.." + std::to_string(rank));
  };
  auto label = [&](std::string_view rest, Kind k) {
    if (rank != 4) throw std::invalid_argument("pentagon labels need rank 4");
    if (rest.empty()) throw std::invalid_argument("missing pentagon label");
    return GeneratorId::pentagon(k, std::stoi(std::string(rest)));
  };
  if (ident.starts_with("Om")) return label(ident.substr(2), Kind::Omega);
  if (ident.starts_with("om")) return label(ident.substr(2), Kind::omega);
  if (ident.starts_with("Ga")) return label(ident.substr(2), Kind::Gamma);
  if (ident.empty()) throw std::invalid_argument("empty identifier");
  std::vector<int> idx = digits_of(ident.substr(1));
  in_range(idx);
  switch (ident.front()) {
    case 'C': {
      if (idx.empty()) throw std::invalid_argument("C needs indices");
      std::uint16_t m = index_mask(idx);
      if (static_cast<std::size_t>(std::popcount(m)) != idx.size())
        throw std::invalid_argument("repeated index in " + std::string(ident));
      return GeneratorId::C_mask(m);
    }
    case 'P':
      if (idx.size() == 1) return GeneratorId::P(idx[0]);
      if (idx.size() == 2) return GeneratorId::P(idx[0], idx[1]);
      throw std::invalid_argument("P takes one or two indices");
    case 'D': {
      if (idx.size() != 3) throw std::invalid_argument("D takes three indices");
      auto [s, g] = GeneratorId::D(idx[0], idx[1], idx[2]);
      if (sign) *sign = s;
      else if (s < 0) throw std::invalid_argument("unsorted D needs a sign slot");
      return g;
    }
    default:
      throw std::invalid_argument("unknown generator '" + std::string(ident) + "'");
  }
}

NCPoly parse_expr(std::string_view text, int rank) { return Parser(text, rank).run(); }

}  // namespace racah
