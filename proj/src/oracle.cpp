#include "nearirr/oracle.hpp"

#include "nearirr/criteria.hpp"
#include "nearirr/errors.hpp"
#include "nearirr/gcd_resultant.hpp"
#include "nearirr/geometry.hpp"

#include <algorithm>

namespace nearirr {

namespace {

// Coefficient of Y^(total degree) after the shear X -> X + lambda*Y, as a
// function of lambda: sum of top-degree coefficients times lambda^alpha.
Rational sheared_y_lead(const Polynomial& f, std::int64_t lambda) {
    const std::int64_t d = f.total_degree();
    Rational acc(0);
    for (const auto& [e, c] : f.terms())
        if (e.alpha + e.beta == d) acc += c * rational_pow(Rational(lambda), e.alpha);
    return acc;
}

std::int64_t sheared_resultant_degree(const Polynomial& f, const Polynomial& g,
                                      std::int64_t lambda) {
    const Polynomial fs = f.shear_x_by(Rational(lambda));
    const Polynomial gs = g.shear_x_by(Rational(lambda));
    const Polynomial fm = Polynomial(Rational(1) / sheared_y_lead(f, lambda)) * fs;
    const Polynomial gm = Polynomial(Rational(1) / sheared_y_lead(g, lambda)) * gs;
    const UnivariatePoly res = resultant_y(fm, gm);
    if (res.is_zero()) throw InternalError("vanishing resultant for a coprime pair");
    return res.degree();
}

void require_collinear_support(const Polynomial& F) {
    const std::vector<LatticePoint> pts = F.support();
    for (std::size_t i = 2; i < pts.size(); ++i)
        if (cross(pts[0], pts[1], pts[i]) != 0)
            throw DomainError("support is not collinear");
}

// Divides out the largest X^a Y^b monomial factor.
Polynomial strip_monomial_factor(const Polynomial& F) {
    std::int64_t min_alpha = 0;
    std::int64_t min_beta = 0;
    bool first = true;
    for (const auto& [e, c] : F.terms()) {
        if (first || e.alpha < min_alpha) min_alpha = e.alpha;
        if (first || e.beta < min_beta) min_beta = e.beta;
        first = false;
    }
    Polynomial out;
    for (const auto& [e, c] : F.terms())
        out.add_term({e.alpha - min_alpha, e.beta - min_beta}, c);
    return out;
}

} // namespace

std::int64_t intersection_sum(const Polynomial& f, const Polynomial& g) {
    if (f.is_constant() || g.is_constant())
        throw DomainError("intersection count requires positive-degree inputs");
    if (!bivar_gcd(f, g).is_constant())
        throw DomainError("intersection count requires coprime inputs");

    std::int64_t first_lambda = -1;
    std::int64_t first_value = 0;
    for (std::int64_t lambda = 0;; ++lambda) {
        if (sheared_y_lead(f, lambda) == 0 || sheared_y_lead(g, lambda) == 0) continue;
        const std::int64_t value = sheared_resultant_degree(f, g, lambda);
        if (first_lambda < 0) {
            first_lambda = lambda;
            first_value = value;
            continue;
        }
        if (value != first_value)
            throw InternalError("intersection count depends on the shear parameter");
        return value;
    }
}

bool has_common_affine_zero(const Polynomial& g, const Polynomial& h) {
    if (g.is_constant() || h.is_constant())
        throw DomainError("common-zero test requires nonconstant inputs");
    if (!bivar_gcd(g, h).is_constant()) return true;
    return intersection_sum(g, h) > 0;
}

bool validate_factorization(const Polynomial& f, const std::vector<Polynomial>& factors) {
    if (factors.empty()) throw DomainError("empty factor list");
    for (const Polynomial& p : factors)
        if (p.is_constant()) throw DomainError("constant factor");
    Polynomial product(Rational(1));
    for (const Polynomial& p : factors) product *= p;
    return product == f;
}

bool nearly_irreducible_on_factors(const Polynomial& f,
                                   const std::vector<Polynomial>& factors) {
    if (!validate_factorization(f, factors))
        throw DomainError("factorization does not multiply back to the polynomial");
    for (std::size_t i = 0; i < factors.size(); ++i)
        for (std::size_t j = i + 1; j < factors.size(); ++j)
            if (!has_common_affine_zero(factors[i], factors[j])) return false;
    return true;
}

bool singular_torus_zero_bruteforce(const Polynomial& F) {
    require_collinear_support(F);
    if (F.is_zero()) throw DomainError("zero polynomial");
    if (F.is_constant()) return false;
    const Polynomial g =
        bivar_gcd(bivar_gcd(F, F.derivative(Var::X)), F.derivative(Var::Y));
    return !strip_monomial_factor(g).is_constant();
}

bool common_torus_zero_bruteforce(const Polynomial& F, const Polynomial& G) {
    require_collinear_support(F);
    require_collinear_support(G);
    if (F.is_zero() || G.is_zero()) throw DomainError("zero polynomial");
    const Polynomial a = strip_monomial_factor(F);
    const Polynomial b = strip_monomial_factor(G);
    if (a.is_constant() || b.is_constant()) return false;
    return !bivar_gcd(a, b).is_constant();
}

KBRecord kb_verify(const Polynomial& f, const Polynomial& g) {
    if (f.is_constant() || g.is_constant())
        throw DomainError("intersection bound requires positive-degree inputs");
    if (!is_quasi_convenient(f) || !is_quasi_convenient(g))
        throw DomainError("intersection bound requires quasi-convenient inputs");

    KBRecord rec;
    rec.sum_multiplicities = intersection_sum(f, g);
    rec.nu = nu_infinity(f, g);
    rec.pair_nondegenerate = !check_pair_nondegenerate(f, g).has_value();
    rec.equality = Rational(rec.sum_multiplicities) == rec.nu;

    if (Rational(rec.sum_multiplicities) > rec.nu)
        throw InternalError("intersection count exceeds the area bound");
    if (rec.equality != rec.pair_nondegenerate)
        throw InternalError("equality case disagrees with pair nondegeneracy");
    return rec;
}

} // namespace nearirr
