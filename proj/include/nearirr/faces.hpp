#ifndef NEARIRR_FACES_HPP
#define NEARIRR_FACES_HPP

#include "nearirr/geometry.hpp"
#include "nearirr/polynomial.hpp"
#include "nearirr/univariate.hpp"

namespace nearirr {

/// Univariate encoding of an initial form. With normal w = [p, q] and
/// step s = (-q, p), the coefficient of T^k in phi is the coefficient of f
/// at base + k*s, and
///   init(f, w) = X^base.alpha * Y^base.beta * phi(X^-q * Y^p).
/// phi has nonzero constant and leading coefficients; degree 0 means the
/// initial form is a single monomial.
struct FacePolynomial {
    LatticePoint base;
    LatticePoint step;
    UnivariatePoly phi;
    WeightVector normal;
};

/// Encodes init(f, w). base is the face point minimizing the dot product
/// with step, which fixes the T-orientation. f nonzero; w primitive.
FacePolynomial face_polynomial(const Polynomial& f, WeightVector w);

/// True iff the initial form together with both partials vanishes somewhere
/// on (C*)^2; equivalently, phi has a multiple nonzero root.
bool has_singular_torus_zero(const FacePolynomial& fp);

/// True iff the two initial forms share a zero on (C*)^2. The minus-side phi
/// is moved into the plus side's torus coordinate by coefficient reversal;
/// the test is then a univariate gcd. Requires antipodal normals.
bool antipodal_common_torus_zero(const FacePolynomial& fp_plus,
                                 const FacePolynomial& fp_minus);

} // namespace nearirr

#endif
