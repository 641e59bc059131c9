#ifndef NEARIRR_EXPR_HPP
#define NEARIRR_EXPR_HPP

#include "nearirr/polynomial.hpp"

#include <string>
#include <string_view>

namespace nearirr {

/// Parses an expression over X and Y with + - * ^, parentheses, and integer
/// or fraction literals (e.g. "3/2"). The fraction slash is part of the
/// literal, not a division operator, so "X/2" is a syntax error.
///
/// Grammar (precedence low to high):
///   expr   := term (('+'|'-') term)*
///   term   := signed ('*' signed)*
///   signed := ('+'|'-')* power
///   power  := atom ('^' exponent)*        right-associative fold
///   atom   := INT ('/' INT)? | VAR | '(' expr ')'
///   exponent := sign? INT | '(' sign? INT ')'
///
/// Exponents must be nonnegative integer literals; anything else after '^'
/// is rejected (negative exponent / non-numeric exponent). Variable names
/// are case-insensitive. Throws ParseError with a byte offset.
Polynomial parse_polynomial(std::string_view text);

/// Canonical form: terms in graded-lex descending order, explicit '*',
/// "X^3*Y^2 + X^2*Y^3 - X - Y" style. Zero prints as "0". Output re-parses
/// to the same polynomial.
std::string format_polynomial(const Polynomial& f);

} // namespace nearirr

#endif
