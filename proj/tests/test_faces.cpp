#include "doctest.h"

#include "nearirr/errors.hpp"
#include "nearirr/expr.hpp"
#include "nearirr/faces.hpp"
#include "nearirr/geometry.hpp"

#include "support/corpus.hpp"

#include <string>

using namespace nearirr;

namespace {

Polynomial P(const std::string& text) { return parse_polynomial(text); }

// Expands base, step, phi back into a polynomial; must reproduce init_form.
Polynomial expand(const FacePolynomial& fp) {
    Polynomial out;
    const auto& coeffs = fp.phi.coeffs();
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k] == 0) continue;
        const auto kk = static_cast<std::int64_t>(k);
        out.add_term({fp.base.alpha + kk * fp.step.alpha,
                      fp.base.beta + kk * fp.step.beta},
                     coeffs[k]);
    }
    return out;
}

} // namespace

TEST_CASE("face polynomial encodings of the worked examples") {
    const Polynomial f2 = P("X^3 + X^2*Y - X - Y");

    const FacePolynomial up = face_polynomial(f2, {0, 1});
    CHECK(up.base == LatticePoint{2, 1});
    CHECK(up.step == LatticePoint{-1, 0});
    CHECK(up.normal == WeightVector{0, 1});
    CHECK(up.phi.coeffs() == std::vector<Rational>{1, 0, -1}); // 1 - T^2

    const FacePolynomial down = face_polynomial(f2, {0, -1});
    CHECK(down.base == LatticePoint{1, 0});
    CHECK(down.step == LatticePoint{1, 0});
    CHECK(down.phi.coeffs() == std::vector<Rational>{-1, 0, 1});

    const Polynomial f3 = P("Y + X^2 + X*Y^3 + X^3*Y^4 + X^5*Y^3");
    const FacePolynomial diag = face_polynomial(f3, {1, -1});
    CHECK(diag.base == LatticePoint{2, 0});
    CHECK(diag.step == LatticePoint{1, 1});
    CHECK(diag.phi.coeffs() == std::vector<Rational>{1, 0, 0, 1}); // 1 + T^3
}

TEST_CASE("phi endpoints are nonzero and degree 0 means a monomial face") {
    const Polynomial f = P("X^3*Y^2 + X^2*Y^3 - X - Y");
    // [2,-1] exposes the single vertex (3,2)
    const FacePolynomial vertex = face_polynomial(f, {2, -1});
    CHECK(vertex.phi.degree() == 0);
    CHECK(vertex.base == LatticePoint{3, 2});
    CHECK(init_form(f, {2, -1}).term_count() == 1);

    const FacePolynomial edge = face_polynomial(f, {1, -1});
    CHECK(edge.phi.degree() == 2);
    CHECK(edge.phi.coeff(0) != 0);
    CHECK(edge.phi.leading_coeff() != 0);
}

TEST_CASE("face polynomials reconstruct the initial form") {
    const char* fixtures[] = {
        "X^3*Y^2 + X^2*Y^3 - X - Y",
        "X^3 + X^2*Y - X - Y",
        "X^3 + X^2*Y - X - Y + 1",
        "Y + X^2 + X*Y^3 + X^3*Y^4 + X^5*Y^3",
        "1 + X*Y",
    };
    for (const char* text : fixtures) {
        const Polynomial f = P(text);
        for (const Edge& e : edges_of(newton_diagram(f))) {
            const FacePolynomial fp = face_polynomial(f, e.normal);
            CHECK(expand(fp) == init_form(f, e.normal));
            CHECK(fp.normal == e.normal);
        }
    }
    for (const Polynomial& f : testsupport::corpus(30, 71)) {
        for (const Edge& e : edges_of(newton_diagram(f))) {
            const FacePolynomial fp = face_polynomial(f, e.normal);
            CHECK(expand(fp) == init_form(f, e.normal));
        }
    }
}

TEST_CASE("singular torus zeros of a face") {
    const Polynomial f2 = P("X^3 + X^2*Y - X - Y");
    CHECK_FALSE(has_singular_torus_zero(face_polynomial(f2, {0, 1})));
    CHECK_FALSE(has_singular_torus_zero(face_polynomial(f2, {0, -1})));

    // (X + Y)^2 + X + Y has initial form (X + Y)^2 along [1,1]
    const Polynomial sq = P("(X + Y)^2 + X + Y");
    CHECK(has_singular_torus_zero(face_polynomial(sq, {1, 1})));

    // a single-monomial face never vanishes on the torus
    const Polynomial mono = P("X^2*Y^2 + X");
    CHECK_FALSE(has_singular_torus_zero(face_polynomial(mono, {3, -1})));
    // two-term faces have only simple torus roots
    CHECK_FALSE(has_singular_torus_zero(face_polynomial(mono, {2, -1})));

    const Polynomial f3 = P("Y + X^2 + X*Y^3 + X^3*Y^4 + X^5*Y^3");
    for (const Edge& e : edges_of(newton_diagram(f3)))
        CHECK_FALSE(has_singular_torus_zero(face_polynomial(f3, e.normal)));
}

TEST_CASE("antipodal common torus zeros") {
    const Polynomial f1 = P("X^3*Y^2 + X^2*Y^3 - X - Y");
    CHECK(antipodal_common_torus_zero(face_polynomial(f1, {1, -1}),
                                      face_polynomial(f1, {-1, 1})));

    const Polynomial f2 = P("X^3 + X^2*Y - X - Y");
    CHECK(antipodal_common_torus_zero(face_polynomial(f2, {0, 1}),
                                      face_polynomial(f2, {0, -1})));

    const Polynomial f2s = P("X^3 + X^2*Y - X - Y + 1");
    CHECK_FALSE(antipodal_common_torus_zero(face_polynomial(f2s, {0, 1}),
                                            face_polynomial(f2s, {0, -1})));

    // a vertex face on either side has no torus zero at all
    CHECK_FALSE(antipodal_common_torus_zero(face_polynomial(f1, {2, -1}),
                                            face_polynomial(f1, {-2, 1})));

    CHECK_THROWS_AS(antipodal_common_torus_zero(face_polynomial(f1, {1, 1}),
                                                face_polynomial(f1, {1, -1})),
                    DomainError);
}

TEST_CASE("the antipodal test is symmetric in the two sides") {
    const Polynomial f1 = P("X^3*Y^2 + X^2*Y^3 - X - Y");
    const Polynomial f2 = P("X^3 + X^2*Y - X - Y + 1");
    for (const Polynomial& f : {f1, f2}) {
        for (WeightVector w :
             {WeightVector{1, -1}, WeightVector{0, 1}, WeightVector{1, 0}}) {
            const bool ab = antipodal_common_torus_zero(face_polynomial(f, w),
                                                        face_polynomial(f, -w));
            const bool ba = antipodal_common_torus_zero(face_polynomial(f, -w),
                                                        face_polynomial(f, w));
            CHECK(ab == ba);
        }
    }
}
