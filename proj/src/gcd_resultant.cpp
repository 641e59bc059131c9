#include "nearirr/gcd_resultant.hpp"

#include "nearirr/errors.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <utility>
#include <vector>

namespace nearirr {

namespace {

// Polynomial in Y whose coefficients live in Q[X]. Entry k is the
// coefficient of Y^k; the leading entry is nonzero unless the list is empty.
using YPoly = std::vector<UnivariatePoly>;

void trim(YPoly& a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
}

std::int64_t ydeg(const YPoly& a) { return static_cast<std::int64_t>(a.size()) - 1; }

const UnivariatePoly& ylc(const YPoly& a) { return a.back(); }

YPoly scale(const YPoly& a, const UnivariatePoly& c) {
    YPoly out;
    out.reserve(a.size());
    for (const auto& e : a) out.push_back(e * c);
    trim(out);
    return out;
}

YPoly divide_exact(const YPoly& a, const UnivariatePoly& c) {
    YPoly out;
    out.reserve(a.size());
    for (const auto& e : a) out.push_back(UnivariatePoly::exact_div(e, c));
    return out;
}

YPoly sub(const YPoly& a, const YPoly& b) {
    YPoly out = a;
    if (out.size() < b.size()) out.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) out[i] = out[i] - b[i];
    trim(out);
    return out;
}

// Pseudo-remainder: rem(lc(b)^(deg a - deg b + 1) * a, b), computed
// incrementally with the usual d^e fixup for early degree drops.
YPoly prem(YPoly a, const YPoly& b) {
    const UnivariatePoly d = ylc(b);
    std::int64_t e = ydeg(a) - ydeg(b) + 1;
    while (!a.empty() && ydeg(a) >= ydeg(b)) {
        // a <- d*a - lc(a) * Y^(deg a - deg b) * b
        const UnivariatePoly top = ylc(a);
        const std::int64_t shift = ydeg(a) - ydeg(b);
        YPoly shifted(static_cast<std::size_t>(shift), UnivariatePoly());
        for (const auto& coeffOfB : b) shifted.push_back(coeffOfB * top);
        a = sub(scale(a, d), shifted);
        --e;
    }
    UnivariatePoly fix(Rational(1));
    for (std::int64_t i = 0; i < e; ++i) fix = fix * d;
    return scale(a, fix);
}

// Content in Y: monic gcd over Q[X] of the coefficients. a nonzero.
UnivariatePoly ycontent(const YPoly& a) {
    UnivariatePoly acc;
    for (const auto& e : a) {
        if (e.is_zero()) continue;
        acc = acc.is_zero() ? e.monic() : univ_gcd(acc, e);
        if (acc.is_constant()) break;
    }
    return acc.monic();
}

YPoly to_ypoly(const Polynomial& f) {
    YPoly a = f.y_coefficients();
    trim(a);
    return a;
}

Polynomial from_ypoly(const YPoly& a) { return Polynomial::from_y_coefficients(a); }

UnivariatePoly univ_pow(const UnivariatePoly& base, std::int64_t n) {
    UnivariatePoly acc(Rational(1));
    for (std::int64_t i = 0; i < n; ++i) acc = acc * base;
    return acc;
}

// Subresultant PRS core. Returns the resultant of a and b, both of positive
// Y-degree, with deg a >= deg b.
UnivariatePoly prs_resultant(YPoly a, YPoly b, int sign) {
    UnivariatePoly g(Rational(1));
    UnivariatePoly h(Rational(1));
    for (;;) {
        const std::int64_t da = ydeg(a);
        const std::int64_t db = ydeg(b);
        const std::int64_t delta = da - db;
        if ((da & 1) && (db & 1)) sign = -sign;
        YPoly r = prem(a, b);
        a = std::move(b);
        const UnivariatePoly divisor = g * univ_pow(h, delta);
        b = divide_exact(r, divisor);
        g = ylc(a);
        // h <- g^delta / h^(delta-1); exact inside the subresultant chain.
        if (delta > 0) h = UnivariatePoly::exact_div(univ_pow(g, delta), univ_pow(h, delta - 1));
        if (b.empty()) return UnivariatePoly();
        if (ydeg(b) == 0) {
            const std::int64_t dlast = ydeg(a);
            UnivariatePoly res = UnivariatePoly::exact_div(univ_pow(ylc(b), dlast),
                                                           univ_pow(h, dlast - 1));
            return sign < 0 ? -res : res;
        }
    }
}

// Subresultant PRS gcd of two Y-primitive polynomials; result is primitive.
YPoly prs_gcd_primitive(YPoly a, YPoly b) {
    if (ydeg(a) < ydeg(b)) std::swap(a, b);
    UnivariatePoly g(Rational(1));
    UnivariatePoly h(Rational(1));
    while (ydeg(b) > 0) {
        const std::int64_t delta = ydeg(a) - ydeg(b);
        YPoly r = prem(a, b);
        a = std::move(b);
        if (r.empty()) {
            // a is the last nonzero remainder; strip its content.
            return divide_exact(a, ycontent(a));
        }
        const UnivariatePoly divisor = g * univ_pow(h, delta);
        b = divide_exact(r, divisor);
        g = ylc(a);
        if (delta > 0) h = UnivariatePoly::exact_div(univ_pow(g, delta), univ_pow(h, delta - 1));
    }
    // Nonzero Y-free remainder: primitive inputs share no Y-positive factor.
    return YPoly{UnivariatePoly(Rational(1))};
}

} // namespace

UnivariatePoly resultant_y(const Polynomial& f, const Polynomial& g) {
    if (f.degree_in(Var::Y) < 1 || g.degree_in(Var::Y) < 1)
        throw DomainError("resultant undefined for Y-constant input");
    YPoly a = to_ypoly(f);
    YPoly b = to_ypoly(g);
    const UnivariatePoly ca = ycontent(a);
    const UnivariatePoly cb = ycontent(b);
    a = divide_exact(a, ca);
    b = divide_exact(b, cb);
    // Res(c*A, d*B) = c^(deg B) * d^(deg A) * Res(A, B).
    UnivariatePoly outer = univ_pow(ca, ydeg(b)) * univ_pow(cb, ydeg(a));
    int sign = 1;
    if (ydeg(a) < ydeg(b)) {
        if ((ydeg(a) & 1) && (ydeg(b) & 1)) sign = -1;
        std::swap(a, b);
    }
    return outer * prs_resultant(std::move(a), std::move(b), sign);
}

Polynomial normalize_primitive(const Polynomial& f) {
    if (f.is_zero()) return f;
    Integer den_lcm = 1;
    for (const auto& [e, c] : f.terms())
        den_lcm = boost::multiprecision::lcm(den_lcm, rational_den(c));
    Integer num_gcd = 0;
    for (const auto& [e, c] : f.terms())
        num_gcd = boost::multiprecision::gcd(num_gcd, Integer(rational_num(c) * den_lcm / rational_den(c)));
    Rational scale(den_lcm, num_gcd);
    if (f.terms().rbegin()->second < 0) scale = -scale;
    Polynomial out;
    for (const auto& [e, c] : f.terms()) out.add_term(e, c * scale);
    return out;
}

Polynomial bivar_gcd(const Polynomial& f, const Polynomial& g) {
    if (f.is_zero() && g.is_zero()) throw DomainError("gcd of two zero polynomials");
    if (f.is_zero()) return normalize_primitive(g);
    if (g.is_zero()) return normalize_primitive(f);
    if (f.is_constant() || g.is_constant()) return Polynomial(Rational(1));

    YPoly a = to_ypoly(f);
    YPoly b = to_ypoly(g);
    const UnivariatePoly ca = ycontent(a);
    const UnivariatePoly cb = ycontent(b);
    a = divide_exact(a, ca);
    b = divide_exact(b, cb);

    const UnivariatePoly cont_gcd = univ_gcd(ca, cb);

    YPoly pp_gcd;
    if (ydeg(a) == 0 || ydeg(b) == 0) {
        // A Y-free primitive part is a constant; the primitive gcd is 1.
        pp_gcd = YPoly{UnivariatePoly(Rational(1))};
    } else {
        pp_gcd = prs_gcd_primitive(std::move(a), std::move(b));
    }

    const Polynomial combined =
        from_ypoly(pp_gcd) * from_ypoly(YPoly{cont_gcd});
    return normalize_primitive(combined);
}

std::optional<Polynomial> try_divide_exact(const Polynomial& f, const Polynomial& g) {
    if (g.is_zero()) throw DomainError("division by the zero polynomial");
    Polynomial rem = f;
    Polynomial quot;
    const LatticePoint glead = g.leading_exponent();
    const Rational gcoeff = g.coeff(glead);
    while (!rem.is_zero()) {
        const LatticePoint rlead = rem.leading_exponent();
        if (rlead.alpha < glead.alpha || rlead.beta < glead.beta) return std::nullopt;
        const Polynomial qterm =
            Polynomial::monomial(rlead - glead, rem.coeff(rlead) / gcoeff);
        quot += qterm;
        rem -= qterm * g;
    }
    return quot;
}

} // namespace nearirr
