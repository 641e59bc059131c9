#ifndef NEARIRR_POLYNOMIAL_HPP
#define NEARIRR_POLYNOMIAL_HPP

#include "nearirr/rational.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <vector>

namespace nearirr {

/// Exponent vector (alpha, beta) of a monomial X^alpha Y^beta.
/// Doubles as an exact planar lattice point in the geometry code.
struct LatticePoint {
    std::int64_t alpha = 0;
    std::int64_t beta = 0;

    friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

inline LatticePoint operator+(LatticePoint a, LatticePoint b) {
    return {a.alpha + b.alpha, a.beta + b.beta};
}
inline LatticePoint operator-(LatticePoint a, LatticePoint b) {
    return {a.alpha - b.alpha, a.beta - b.beta};
}

/// 2D cross product (b - a) x (c - a). Positive = left turn a->b->c.
inline std::int64_t cross(LatticePoint a, LatticePoint b, LatticePoint c) {
    return (b.alpha - a.alpha) * (c.beta - a.beta) - (b.beta - a.beta) * (c.alpha - a.alpha);
}

/// Graded lexicographic order: total degree first, then (alpha, beta).
struct GrlexLess {
    bool operator()(const LatticePoint& a, const LatticePoint& b) const {
        const std::int64_t da = a.alpha + a.beta;
        const std::int64_t db = b.alpha + b.beta;
        if (da != db) return da < db;
        if (a.alpha != b.alpha) return a.alpha < b.alpha;
        return a.beta < b.beta;
    }
};

enum class Var { X, Y };

class UnivariatePoly;

/// Sparse bivariate polynomial over the rationals. Stored coefficients are
/// never zero; exponents are nonnegative.
class Polynomial {
public:
    using TermMap = std::map<LatticePoint, Rational, GrlexLess>;

    Polynomial() = default;
    explicit Polynomial(const Rational& constant);
    static Polynomial monomial(LatticePoint exponent, const Rational& coeff);
    static Polynomial variable(Var v);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Total degree; -1 for the zero polynomial.
    std::int64_t total_degree() const;
    /// Degree in one variable; -1 for the zero polynomial.
    std::int64_t degree_in(Var v) const;
    std::size_t term_count() const { return terms_.size(); }

    const TermMap& terms() const { return terms_; }
    /// Coefficient of X^alpha Y^beta (zero if absent).
    Rational coeff(LatticePoint exponent) const;
    /// Largest exponent in graded-lex order. Polynomial must be nonzero.
    LatticePoint leading_exponent() const;

    std::vector<LatticePoint> support() const;

    void add_term(LatticePoint exponent, const Rational& coeff);

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
    friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
    friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
    Polynomial& operator*=(const Polynomial& rhs) { return *this = *this * rhs; }
    friend bool operator==(const Polynomial& lhs, const Polynomial& rhs) {
        return lhs.terms_ == rhs.terms_;
    }

    Polynomial pow(std::int64_t n) const;
    Polynomial derivative(Var v) const;
    Rational evaluate(const Rational& x, const Rational& y) const;

    /// f(X + lambda*Y, Y), the shear used to make leading Y-coefficients constant.
    Polynomial shear_x_by(const Rational& lambda) const;

    /// Dense coefficient list in Y: entry k is the coefficient of Y^k, an
    /// element of Q[X]. Empty for the zero polynomial.
    std::vector<UnivariatePoly> y_coefficients() const;
    static Polynomial from_y_coefficients(const std::vector<UnivariatePoly>& coeffs);

private:
    TermMap terms_;
};

} // namespace nearirr

#endif
