#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "racah/ncpoly.hpp"

namespace racah {

struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " at offset " + std::to_string(pos)), offset(pos) {}
  std::size_t offset;
};

// Grammar:
//   expr   := term (('+' | '-') term)*
//   term   := ['-'] factor ('*' factor)*
//   factor := atom ('^' integer)?
//   atom   := integer ['/' integer] | ident | '(' expr ')'
//           | '[' expr ',' expr ']' | '{' expr ',' expr '}'
//   ident  := C<digits> | P<d>[<d>] | D<d><d><d> | Om<d> | om<d> | Ga<d>
// Decimal literals are rejected. NCPoly::str() output parses back to the
// same polynomial.
NCPoly parse_expr(std::string_view text, int rank);

GeneratorId parse_generator(std::string_view ident, int rank, int* sign = nullptr);

}  // namespace racah
