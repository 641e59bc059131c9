#include "nearirr/faces.hpp"

#include "nearirr/errors.hpp"

#include <vector>

namespace nearirr {

namespace {

std::int64_t dot(LatticePoint a, LatticePoint b) {
    return a.alpha * b.alpha + a.beta * b.beta;
}

} // namespace

FacePolynomial face_polynomial(const Polynomial& f, WeightVector w) {
    const Polynomial init = init_form(f, w);
    const LatticePoint step{-w.q, w.p};

    LatticePoint base = init.terms().begin()->first;
    std::int64_t best = dot(step, base);
    for (const auto& [e, c] : init.terms()) {
        const std::int64_t val = dot(step, e);
        if (val < best) {
            best = val;
            base = e;
        }
    }

    // Face points sit at base + k*step for integer k >= 0; step is primitive,
    // so k is read off whichever coordinate of step is nonzero.
    std::vector<Rational> coeffs;
    for (const auto& [e, c] : init.terms()) {
        const LatticePoint offset = e - base;
        const std::int64_t k = step.alpha != 0 ? offset.alpha / step.alpha
                                               : offset.beta / step.beta;
        if (static_cast<std::int64_t>(coeffs.size()) <= k)
            coeffs.resize(static_cast<std::size_t>(k) + 1, Rational(0));
        coeffs[static_cast<std::size_t>(k)] = c;
    }
    return {base, step, UnivariatePoly(std::move(coeffs)), w};
}

bool has_singular_torus_zero(const FacePolynomial& fp) {
    return !univ_squarefree(fp.phi.strip_power_factor());
}

bool antipodal_common_torus_zero(const FacePolynomial& fp_plus,
                                 const FacePolynomial& fp_minus) {
    if (fp_plus.normal != -fp_minus.normal)
        throw DomainError("face normals are not antipodal");
    const UnivariatePoly a = fp_plus.phi.strip_power_factor();
    const UnivariatePoly b = fp_minus.phi.reversed().strip_power_factor();
    if (a.is_constant() || b.is_constant()) return false;
    return !univ_gcd(a, b).is_constant();
}

} // namespace nearirr
