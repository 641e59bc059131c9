#include "nearirr/univariate.hpp"

#include "nearirr/errors.hpp"

#include <algorithm>

namespace nearirr {

UnivariatePoly::UnivariatePoly(const Rational& constant) {
    if (constant != 0) coeffs_.push_back(constant);
}

UnivariatePoly::UnivariatePoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
}

UnivariatePoly UnivariatePoly::monomial(std::int64_t degree, const Rational& coeff) {
    if (degree < 0) throw DomainError("univariate monomial: negative degree");
    UnivariatePoly p;
    if (coeff != 0) {
        p.coeffs_.assign(static_cast<std::size_t>(degree) + 1, Rational(0));
        p.coeffs_.back() = coeff;
    }
    return p;
}

void UnivariatePoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational UnivariatePoly::coeff(std::int64_t k) const {
    if (k < 0 || k > degree()) return Rational(0);
    return coeffs_[static_cast<std::size_t>(k)];
}

const Rational& UnivariatePoly::leading_coeff() const {
    if (is_zero()) throw DomainError("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

UnivariatePoly UnivariatePoly::operator-() const {
    UnivariatePoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

UnivariatePoly operator+(const UnivariatePoly& a, const UnivariatePoly& b) {
    std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
    return UnivariatePoly(std::move(out));
}

UnivariatePoly operator-(const UnivariatePoly& a, const UnivariatePoly& b) {
    std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] -= b.coeffs_[i];
    return UnivariatePoly(std::move(out));
}

UnivariatePoly operator*(const UnivariatePoly& a, const UnivariatePoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return UnivariatePoly(std::move(out));
}

UnivariatePoly UnivariatePoly::operator*(const Rational& scalar) const {
    if (scalar == 0) return {};
    UnivariatePoly r = *this;
    for (auto& c : r.coeffs_) c *= scalar;
    return r;
}

UnivariatePoly UnivariatePoly::pow(std::int64_t n) const {
    if (n < 0) throw DomainError("univariate pow: negative exponent");
    UnivariatePoly result(Rational(1));
    UnivariatePoly base = *this;
    while (n > 0) {
        if (n & 1) result = result * base;
        base = base * base;
        n >>= 1;
    }
    return result;
}

std::pair<UnivariatePoly, UnivariatePoly> UnivariatePoly::divmod(const UnivariatePoly& a,
                                                                 const UnivariatePoly& b) {
    if (b.is_zero()) throw DomainError("univariate division by zero");
    UnivariatePoly r = a;
    std::vector<Rational> q;
    if (a.degree() >= b.degree())
        q.assign(static_cast<std::size_t>(a.degree() - b.degree()) + 1, Rational(0));
    const Rational& lb = b.leading_coeff();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        const std::int64_t shift = r.degree() - b.degree();
        const Rational factor = r.leading_coeff() / lb;
        q[static_cast<std::size_t>(shift)] = factor;
        std::vector<Rational> coeffs = r.coeffs_;
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i)
            coeffs[i + static_cast<std::size_t>(shift)] -= factor * b.coeffs_[i];
        r = UnivariatePoly(std::move(coeffs));
    }
    return {UnivariatePoly(std::move(q)), r};
}

UnivariatePoly UnivariatePoly::exact_div(const UnivariatePoly& a, const UnivariatePoly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw InternalError("univariate division expected to be exact");
    return q;
}

UnivariatePoly UnivariatePoly::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> out(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k)
        out[k - 1] = coeffs_[k] * Rational(static_cast<long long>(k));
    return UnivariatePoly(std::move(out));
}

Rational UnivariatePoly::evaluate(const Rational& t) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

UnivariatePoly UnivariatePoly::monic() const {
    if (is_zero()) return {};
    return *this * (Rational(1) / leading_coeff());
}

UnivariatePoly UnivariatePoly::strip_power_factor() const {
    if (is_zero()) return {};
    std::size_t k = 0;
    while (coeffs_[k] == 0) ++k;
    return UnivariatePoly(std::vector<Rational>(coeffs_.begin() + static_cast<std::ptrdiff_t>(k),
                                                coeffs_.end()));
}

UnivariatePoly UnivariatePoly::reversed() const {
    std::vector<Rational> out(coeffs_.rbegin(), coeffs_.rend());
    return UnivariatePoly(std::move(out));
}

UnivariatePoly univ_gcd(const UnivariatePoly& a, const UnivariatePoly& b) {
    if (a.is_zero() && b.is_zero()) throw DomainError("gcd(0, 0) is undefined");
    UnivariatePoly f = a, g = b;
    while (!g.is_zero()) {
        auto [q, r] = UnivariatePoly::divmod(f, g);
        f = g;
        g = r;
    }
    return f.monic();
}

bool univ_squarefree(const UnivariatePoly& a) {
    if (a.is_zero()) throw DomainError("squarefree test on the zero polynomial");
    if (a.is_constant()) return true;
    return univ_gcd(a, a.derivative()).is_constant();
}

} // namespace nearirr
