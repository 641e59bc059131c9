#ifndef NEARIRR_ORACLE_HPP
#define NEARIRR_ORACLE_HPP

#include "nearirr/polynomial.hpp"

#include <cstdint>
#include <vector>

namespace nearirr {

/// Outcome of the intersection-count comparison for one coprime pair.
struct KBRecord {
    std::int64_t sum_multiplicities = 0;
    Rational nu;
    bool pair_nondegenerate = false;
    bool equality = false;
};

/// Total number of common affine zeros of f and g counted with intersection
/// multiplicity. Shears X -> X + lambda*Y with the smallest lambda making
/// both leading Y-coefficients constant, then reads off deg_X Res_Y; a
/// second admissible lambda must reproduce the value. Inputs must be
/// coprime and of positive degree.
std::int64_t intersection_sum(const Polynomial& f, const Polynomial& g);

/// True iff g and h share a zero in C^2: either a common component, or a
/// positive intersection count. Both inputs nonconstant.
bool has_common_affine_zero(const Polynomial& g, const Polynomial& h);

/// True iff the product of factors equals f exactly. Factors must be
/// nonconstant and the list nonempty.
bool validate_factorization(const Polynomial& f, const std::vector<Polynomial>& factors);

/// True iff every unordered pair of the supplied factors meets in C^2.
/// The factorization must validate.
bool nearly_irreducible_on_factors(const Polynomial& f,
                                   const std::vector<Polynomial>& factors);

/// Independent check that F = dF/dX = dF/dY = 0 has a torus solution,
/// via the bivariate gcd of the three, stripped of X and Y factors. F must
/// have collinear support (callers pass initial forms).
bool singular_torus_zero_bruteforce(const Polynomial& F);

/// Independent check that F = G = 0 has a torus solution, via the stripped
/// bivariate gcd. Each support must be collinear.
bool common_torus_zero_bruteforce(const Polynomial& F, const Polynomial& G);

/// Runs the full comparison and enforces both halves of the intersection
/// bound: sum <= nu always, with equality exactly under pair nondegeneracy.
/// A violation of either is an InternalError. Inputs quasi-convenient,
/// positive degree, coprime.
KBRecord kb_verify(const Polynomial& f, const Polynomial& g);

} // namespace nearirr

#endif
