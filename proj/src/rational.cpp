#include "nearirr/rational.hpp"

#include "nearirr/errors.hpp"

namespace nearirr {

Rational rational_pow(const Rational& q, long long n) {
    if (n < 0) throw DomainError("rational_pow: negative exponent");
    Rational result(1);
    Rational base = q;
    while (n > 0) {
        if (n & 1) result *= base;
        base *= base;
        n >>= 1;
    }
    return result;
}

std::string rational_to_string(const Rational& q) {
    if (rational_den(q) == 1) return rational_num(q).str();
    return rational_num(q).str() + "/" + rational_den(q).str();
}

} // namespace nearirr
