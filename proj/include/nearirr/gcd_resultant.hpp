#ifndef NEARIRR_GCD_RESULTANT_HPP
#define NEARIRR_GCD_RESULTANT_HPP

#include "nearirr/polynomial.hpp"
#include "nearirr/univariate.hpp"

#include <optional>

namespace nearirr {

/// Res_Y(f, g) as a polynomial in X, computed by a subresultant PRS on
/// primitive parts with contents tracked separately. Exact.
/// Requires deg_Y f >= 1 and deg_Y g >= 1.
UnivariatePoly resultant_y(const Polynomial& f, const Polynomial& g);

/// Gcd over Q[X,Y], normalized: integer coefficients with content 1 and
/// positive leading (graded-lex) coefficient. Errors when both inputs are
/// zero; gcd(f, 0) is the normalization of f.
Polynomial bivar_gcd(const Polynomial& f, const Polynomial& g);

/// Scales a nonzero polynomial to coprime integer coefficients with positive
/// leading graded-lex coefficient. The zero polynomial maps to itself.
Polynomial normalize_primitive(const Polynomial& f);

/// Exact quotient f / g, or nullopt when g does not divide f. g nonzero.
std::optional<Polynomial> try_divide_exact(const Polynomial& f, const Polynomial& g);

} // namespace nearirr

#endif
