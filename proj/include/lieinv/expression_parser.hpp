#pragma once

#include <string_view>

#include "lieinv/power_product.hpp"
#include "lieinv/rational_expression.hpp"

namespace lieinv {

// Expression grammar shared by the CLI and tests:
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := '-' unary | power
//   power   := atom ('^' exponent)?
//   exponent:= ['-'] integer | '(' ['-'] integer ['/' integer] ')'
//   atom    := integer | identifier | '(' expr ')'
//
// Identifiers resolve through VarNames (coordinates, t<k>, v<k>). Fractional
// exponents are only legal in products; sums of such factors are rejected.
// Errors raise ParseError carrying the 0-based offset of the offending character.
PowerProduct parse_power_product(std::string_view text, const VarNames& names = VarNames::standard());

// As above, but the result must be a rational expression.
RationalExpression parse_expression(std::string_view text, const VarNames& names = VarNames::standard());

}  // namespace lieinv
