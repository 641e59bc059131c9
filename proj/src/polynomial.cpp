#include "nearirr/polynomial.hpp"

#include "nearirr/errors.hpp"
#include "nearirr/univariate.hpp"

#include <algorithm>

namespace nearirr {

Polynomial::Polynomial(const Rational& constant) {
    if (constant != 0) terms_.emplace(LatticePoint{0, 0}, constant);
}

Polynomial Polynomial::monomial(LatticePoint exponent, const Rational& coeff) {
    if (exponent.alpha < 0 || exponent.beta < 0)
        throw DomainError("monomial: negative exponent");
    Polynomial p;
    if (coeff != 0) p.terms_.emplace(exponent, coeff);
    return p;
}

Polynomial Polynomial::variable(Var v) {
    return monomial(v == Var::X ? LatticePoint{1, 0} : LatticePoint{0, 1}, Rational(1));
}

bool Polynomial::is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && terms_.begin()->first == LatticePoint{0, 0});
}

std::int64_t Polynomial::total_degree() const {
    if (terms_.empty()) return -1;
    const LatticePoint lead = terms_.rbegin()->first;
    return lead.alpha + lead.beta;
}

std::int64_t Polynomial::degree_in(Var v) const {
    if (terms_.empty()) return -1;
    std::int64_t d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, v == Var::X ? e.alpha : e.beta);
    return d;
}

Rational Polynomial::coeff(LatticePoint exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Rational(0) : it->second;
}

LatticePoint Polynomial::leading_exponent() const {
    if (terms_.empty()) throw DomainError("leading exponent of the zero polynomial");
    return terms_.rbegin()->first;
}

std::vector<LatticePoint> Polynomial::support() const {
    std::vector<LatticePoint> pts;
    pts.reserve(terms_.size());
    for (const auto& [e, c] : terms_) pts.push_back(e);
    return pts;
}

void Polynomial::add_term(LatticePoint exponent, const Rational& coeff) {
    if (exponent.alpha < 0 || exponent.beta < 0)
        throw DomainError("add_term: negative exponent");
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(exponent, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
    Polynomial out;
    for (const auto& [ea, ca] : lhs.terms_)
        for (const auto& [eb, cb] : rhs.terms_) out.add_term(ea + eb, ca * cb);
    return out;
}

Polynomial Polynomial::pow(std::int64_t n) const {
    if (n < 0) throw DomainError("pow: negative exponent");
    Polynomial result(Rational(1));
    Polynomial base = *this;
    while (n > 0) {
        if (n & 1) result *= base;
        base *= base;
        n >>= 1;
    }
    return result;
}

Polynomial Polynomial::derivative(Var v) const {
    Polynomial out;
    for (const auto& [e, c] : terms_) {
        if (v == Var::X) {
            if (e.alpha > 0)
                out.add_term({e.alpha - 1, e.beta}, c * Rational(static_cast<long long>(e.alpha)));
        } else {
            if (e.beta > 0)
                out.add_term({e.alpha, e.beta - 1}, c * Rational(static_cast<long long>(e.beta)));
        }
    }
    return out;
}

Rational Polynomial::evaluate(const Rational& x, const Rational& y) const {
    Rational acc(0);
    for (const auto& [e, c] : terms_)
        acc += c * rational_pow(x, e.alpha) * rational_pow(y, e.beta);
    return acc;
}

Polynomial Polynomial::shear_x_by(const Rational& lambda) const {
    Polynomial out;
    for (const auto& [e, c] : terms_) {
        // (X + lambda*Y)^alpha expanded with running binomial coefficients.
        Integer binom = 1;
        Rational lambda_pow(1);
        for (std::int64_t k = e.alpha; k >= 0; --k) {
            // term: C(alpha, k) * lambda^(alpha-k) * X^k * Y^(beta + alpha - k)
            out.add_term({k, e.beta + e.alpha - k}, c * Rational(binom) * lambda_pow);
            if (k > 0) {
                binom = binom * k / (e.alpha - k + 1);
                lambda_pow *= lambda;
            }
        }
    }
    return out;
}

std::vector<UnivariatePoly> Polynomial::y_coefficients() const {
    if (terms_.empty()) return {};
    const std::int64_t dy = degree_in(Var::Y);
    std::vector<std::vector<Rational>> raw(static_cast<std::size_t>(dy) + 1);
    for (const auto& [e, c] : terms_) {
        auto& row = raw[static_cast<std::size_t>(e.beta)];
        if (static_cast<std::int64_t>(row.size()) <= e.alpha)
            row.resize(static_cast<std::size_t>(e.alpha) + 1, Rational(0));
        row[static_cast<std::size_t>(e.alpha)] = c;
    }
    std::vector<UnivariatePoly> out;
    out.reserve(raw.size());
    for (auto& row : raw) out.emplace_back(std::move(row));
    return out;
}

Polynomial Polynomial::from_y_coefficients(const std::vector<UnivariatePoly>& coeffs) {
    Polynomial out;
    for (std::size_t beta = 0; beta < coeffs.size(); ++beta)
        for (std::int64_t alpha = 0; alpha <= coeffs[beta].degree(); ++alpha)
            out.add_term({alpha, static_cast<std::int64_t>(beta)}, coeffs[beta].coeff(alpha));
    return out;
}

} // namespace nearirr
