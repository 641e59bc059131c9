// Acceptance gate: one line per criterion, nonzero exit on any failure.
// Exercises the installed CLI binary for the user-facing flows and the
// library plus the brute-force oracles for the property suites.

#include "nearirr/criteria.hpp"
#include "nearirr/expr.hpp"
#include "nearirr/faces.hpp"
#include "nearirr/gcd_resultant.hpp"
#include "nearirr/geometry.hpp"
#include "nearirr/oracle.hpp"
#include "nearirr/report.hpp"

#include "json.hpp"

#include "support/corpus.hpp"

#include <cstdio>
#include <exception>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

using namespace nearirr;
using nearirr::testsupport::run_cli;
using JsonDoc = nlohmann::ordered_json;

namespace {

int failures = 0;

void report(int num, const std::string& what, bool ok, const std::string& detail) {
    std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", num, what.c_str());
    if (!ok && !detail.empty()) std::printf("     %s\n", detail.c_str());
    if (!ok) ++failures;
}

void run(int num, const std::string& what, bool (*fn)(std::string&)) {
    std::string detail;
    bool ok = false;
    try {
        ok = fn(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    report(num, what, ok, detail);
}

Polynomial P(const std::string& text) { return parse_polynomial(text); }

#define NEED(cond)                                                        \
    do {                                                                  \
        if (!(cond)) {                                                    \
            detail = std::string("failed: ") + #cond;                     \
            return false;                                                 \
        }                                                                 \
    } while (0)

bool criterion1(std::string& detail) {
    const auto chk = run_cli({"check", "X^3*Y^2 + X^2*Y^3 - X - Y"});
    NEED(chk.exit_code == 0);
    const JsonDoc rep = JsonDoc::parse(chk.out);
    NEED(rep["quasi_convenient"] == true);
    NEED(rep["nondegenerate_at_infinity"] == true);
    NEED(rep["antipodal_condition_holds"] == false);
    NEED(rep["verdict"]["status"] == "UNKNOWN");
    NEED(rep["verdict"]["witnesses"].size() == 1);
    NEED(rep["verdict"]["witnesses"][0]["kind"] == "ANTIPODAL_CONDITION_FAILS");
    NEED(rep["verdict"]["witnesses"][0]["weight"] == JsonDoc::array({1, -1}));

    const auto fac = run_cli({"factors", "X^3*Y^2 + X^2*Y^3 - X - Y", "X*Y - 1",
                              "X*Y + 1", "X + Y"});
    NEED(fac.exit_code == 0);
    const JsonDoc frep = JsonDoc::parse(fac.out);
    NEED(frep["valid"] == true);
    NEED(frep["nearly_irreducible_on_factors"] == false);
    bool sawPair = false;
    for (const auto& pj : frep["pairs"]) {
        if (pj["g"] == "X*Y - 1" && pj["h"] == "X*Y + 1") {
            sawPair = true;
            NEED(pj["shared_component"] == false);
            NEED(pj["intersection_sum"] == 0);
            NEED(pj["common_zero"] == false);
        }
    }
    NEED(sawPair);
    return true;
}

bool criterion2(std::string& detail) {
    const auto chk = run_cli({"check", "X^3 + X^2*Y - X - Y"});
    NEED(chk.exit_code == 0);
    const JsonDoc rep = JsonDoc::parse(chk.out);
    NEED(rep["antipodal_condition_holds"] == false);
    NEED(rep["verdict"]["status"] == "UNKNOWN");
    NEED(rep["verdict"]["witnesses"][0]["weight"] == JsonDoc::array({0, 1}));

    const Polynomial f = P("X^3 + X^2*Y - X - Y");
    NEED(init_form(f, {0, 1}) == P("Y") * P("X^2 - 1"));
    NEED(init_form(f, {0, -1}) == P("X") * P("X^2 - 1"));

    const auto chk2 = run_cli({"check", "X^3 + X^2*Y - X - Y + 1"});
    NEED(chk2.exit_code == 0);
    NEED(JsonDoc::parse(chk2.out)["verdict"]["status"] == "NEARLY_IRREDUCIBLE");
    return true;
}

bool criterion3(std::string& detail) {
    const auto chk = run_cli({"check", "Y + X^2 + X*Y^3 + X^3*Y^4 + X^5*Y^3"});
    NEED(chk.exit_code == 0);
    const JsonDoc rep = JsonDoc::parse(chk.out);
    NEED(rep["verdict"]["status"] == "NEARLY_IRREDUCIBLE");
    NEED(rep["verdict"]["via"] == "NO_PARALLEL_FACES");
    NEED(rep["diagram"]["doubled_area"] == 23);
    NEED(rep["edges"].size() == 6);

    const LatticePolygon diagram =
        newton_diagram(P("Y + X^2 + X*Y^3 + X^3*Y^4 + X^5*Y^3"));
    NEED(edges_of(diagram).size() == 6);
    NEED(antipodal_pairs(diagram).empty());
    return true;
}

bool criterion4(std::string& detail) {
    const KBRecord r1 = kb_verify(P("X^2 + Y^2 - 1"), P("X + Y"));
    NEED(r1.sum_multiplicities == 2);
    NEED(r1.nu == Rational(2));
    NEED(r1.pair_nondegenerate);
    NEED(r1.equality);

    const KBRecord r2 = kb_verify(P("X + Y"), P("X + Y + 1"));
    NEED(r2.sum_multiplicities == 0);
    NEED(r2.nu == Rational(1));
    NEED(!r2.pair_nondegenerate);
    NEED(!r2.equality);

    const KBRecord r3 = kb_verify(P("1 + X*Y"), P("1 + X*Y + X^2*Y^2"));
    NEED(r3.sum_multiplicities == 0);
    NEED(r3.nu == Rational(0));
    NEED(r3.equality);
    return true;
}

std::vector<Polynomial> the_corpus() { return testsupport::corpus(200, 0xC0FFEE); }

bool criterion5(std::string& detail) {
    const auto polys = the_corpus();
    for (std::size_t i = 0; i < polys.size(); ++i) {
        const Polynomial& f = polys[i];
        const Polynomial& g = polys[(i * 37 + 11) % polys.size()];

        const LatticePolygon df = newton_diagram(f);
        const LatticePolygon dg = newton_diagram(g);
        const LatticePolygon dfg = newton_diagram(f * g);
        if (!(dfg == minkowski_sum(df, dg))) {
            detail = "additivity failed for " + format_polynomial(f) + " and " +
                     format_polynomial(g);
            return false;
        }

        const Rational nu = nu_infinity(f, g);
        NEED(nu >= 0);

        const std::int64_t A = doubled_area(dfg);
        const std::int64_t a = doubled_area(df);
        const std::int64_t b = doubled_area(dg);
        NEED(A - a - b >= 0);
        NEED((A - a - b) * (A - a - b) >= 4 * a * b);

        if (nu == 0) {
            const auto wf = is_segment_through_origin(df);
            const auto wg = is_segment_through_origin(dg);
            if (!wf || !wg || !(*wf == *wg)) {
                detail = "nu = 0 outside the parallel-segment case for " +
                         format_polynomial(f) + " and " + format_polynomial(g);
                return false;
            }
        }
    }
    return true;
}

bool criterion6(std::string& detail) {
    for (const Polynomial& f : the_corpus()) {
        const LatticePolygon diagram = newton_diagram(f);
        for (const Edge& e : edges_of(diagram)) {
            const bool fast = has_singular_torus_zero(face_polynomial(f, e.normal));
            const bool slow = singular_torus_zero_bruteforce(init_form(f, e.normal));
            if (fast != slow) {
                detail = "singular-face disagreement for " + format_polynomial(f) +
                         " at [" + std::to_string(e.normal.p) + "," +
                         std::to_string(e.normal.q) + "]";
                return false;
            }
        }
        for (const WeightVector& w : antipodal_pairs(diagram)) {
            const bool fast = antipodal_common_torus_zero(face_polynomial(f, w),
                                                          face_polynomial(f, -w));
            const bool slow =
                common_torus_zero_bruteforce(init_form(f, w), init_form(f, -w));
            if (fast != slow) {
                detail = "antipodal disagreement for " + format_polynomial(f) +
                         " at [" + std::to_string(w.p) + "," + std::to_string(w.q) +
                         "]";
                return false;
            }
        }
    }
    return true;
}

std::vector<std::pair<Polynomial, Polynomial>> factor_pairs() {
    std::mt19937_64 rng(0xBEEF5EED);
    std::vector<std::pair<Polynomial, Polynomial>> out;
    for (int i = 0; i < 80; ++i)
        out.push_back(testsupport::random_coprime_pair(rng, 4));
    return out;
}

bool criterion7(std::string& detail) {
    int nondegenerate_products = 0;
    for (const auto& [g, h] : factor_pairs()) {
        const Polynomial f = g * h;
        if (check_nondegenerate_at_infinity(f).has_value()) continue;
        ++nondegenerate_products;
        if (check_pair_nondegenerate(g, h).has_value()) {
            detail = "product nondegenerate but pair check failed for " +
                     format_polynomial(g) + " and " + format_polynomial(h);
            return false;
        }
    }
    if (nondegenerate_products < 50) {
        std::ostringstream os;
        os << "only " << nondegenerate_products
           << " nondegenerate products in the sample (need 50)";
        detail = os.str();
        return false;
    }
    return true;
}

bool criterion8(std::string& detail) {
    for (const auto& [g, h] : factor_pairs()) {
        const Polynomial f = g * h;
        const Verdict v = check_nearly_irreducible(f);
        if (v.status != VerdictStatus::NEARLY_IRREDUCIBLE) continue;
        // the factors are coprime by construction, so they must truly meet
        if (intersection_sum(g, h) == 0) {
            detail = "certified product with disjoint factors: " +
                     format_polynomial(g) + " and " + format_polynomial(h);
            return false;
        }
    }
    return true;
}

bool criterion9(std::string& detail) {
    for (const Polynomial& f : the_corpus()) {
        const std::string once = format_polynomial(f);
        const Polynomial back = parse_polynomial(once);
        NEED(back == f);
        NEED(format_polynomial(back) == once);
    }

    const auto support_of = [](const char* text) {
        return parse_polynomial(text).support();
    };
    NEED(support_of("X^3*Y^2 + X^2*Y^3 - X - Y") ==
         (std::vector<LatticePoint>{{0, 1}, {1, 0}, {2, 3}, {3, 2}}));
    NEED(support_of("X^3 + X^2*Y - X - Y") ==
         (std::vector<LatticePoint>{{0, 1}, {1, 0}, {2, 1}, {3, 0}}));
    NEED(support_of("Y + X^2 + X*Y^3 + X^3*Y^4 + X^5*Y^3") ==
         (std::vector<LatticePoint>{{0, 1}, {2, 0}, {1, 3}, {3, 4}, {5, 3}}));
    return true;
}

} // namespace

int main() {
    run(1, "check and factors reproduce the X^3*Y^2 + X^2*Y^3 - X - Y analysis",
        criterion1);
    run(2, "antipodal failure at [0,1] and certification after adding 1", criterion2);
    run(3, "no-parallel-faces fast path with doubled area 23", criterion3);
    run(4, "intersection counts meet the area bounds on three fixed pairs",
        criterion4);
    run(5, "diagram additivity and area-defect properties across the corpus",
        criterion5);
    run(6, "face reductions agree with the brute-force oracles on every face",
        criterion6);
    run(7, "nondegenerate products always have nondegenerate factor pairs",
        criterion7);
    run(8, "certified verdicts are consistent with the known factorizations",
        criterion8);
    run(9, "print-parse round trip is a fixpoint and supports are exact",
        criterion9);

    if (failures > 0) {
        std::printf("%d of 9 criteria failed\n", failures);
        return 1;
    }
    std::printf("all 9 criteria passed\n");
    return 0;
}
