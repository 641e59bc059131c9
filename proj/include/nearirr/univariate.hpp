#ifndef NEARIRR_UNIVARIATE_HPP
#define NEARIRR_UNIVARIATE_HPP

#include "nearirr/rational.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace nearirr {

/// Dense univariate polynomial over the rationals; coeffs()[k] is the
/// coefficient of T^k. The zero polynomial has an empty coefficient list;
/// otherwise the trailing (leading) coefficient is nonzero.
class UnivariatePoly {
public:
    UnivariatePoly() = default;
    explicit UnivariatePoly(const Rational& constant);
    explicit UnivariatePoly(std::vector<Rational> coeffs);

    static UnivariatePoly monomial(std::int64_t degree, const Rational& coeff);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    /// -1 for the zero polynomial.
    std::int64_t degree() const { return static_cast<std::int64_t>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational coeff(std::int64_t k) const;
    const Rational& leading_coeff() const;

    UnivariatePoly operator-() const;
    friend UnivariatePoly operator+(const UnivariatePoly& a, const UnivariatePoly& b);
    friend UnivariatePoly operator-(const UnivariatePoly& a, const UnivariatePoly& b);
    friend UnivariatePoly operator*(const UnivariatePoly& a, const UnivariatePoly& b);
    UnivariatePoly operator*(const Rational& scalar) const;
    friend bool operator==(const UnivariatePoly& a, const UnivariatePoly& b) {
        return a.coeffs_ == b.coeffs_;
    }

    UnivariatePoly pow(std::int64_t n) const;

    /// Quotient and remainder with deg r < deg b. b must be nonzero.
    static std::pair<UnivariatePoly, UnivariatePoly> divmod(const UnivariatePoly& a,
                                                            const UnivariatePoly& b);
    /// Exact quotient; throws InternalError if the division leaves a remainder.
    static UnivariatePoly exact_div(const UnivariatePoly& a, const UnivariatePoly& b);

    UnivariatePoly derivative() const;
    Rational evaluate(const Rational& t) const;
    UnivariatePoly monic() const;

    /// T^k factor removed, i.e. divided by T^(order of the root at 0).
    UnivariatePoly strip_power_factor() const;
    /// Coefficient list reversed: T^deg * p(1/T). Nonzero roots map to inverses.
    UnivariatePoly reversed() const;

private:
    void normalize();
    std::vector<Rational> coeffs_;
};

/// Monic gcd; gcd(a, 0) = monic(a). Errors when both inputs are zero.
UnivariatePoly univ_gcd(const UnivariatePoly& a, const UnivariatePoly& b);

/// True iff a has no multiple complex root, i.e. gcd(a, a') is constant.
/// Errors on the zero polynomial.
bool univ_squarefree(const UnivariatePoly& a);

} // namespace nearirr

#endif
