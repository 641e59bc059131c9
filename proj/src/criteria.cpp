#include "nearirr/criteria.hpp"

#include "nearirr/errors.hpp"
#include "nearirr/faces.hpp"

#include <algorithm>

namespace nearirr {

namespace {

void require_quasi_convenient(const Polynomial& f) {
    if (!is_quasi_convenient(f))
        throw DomainError("polynomial is not quasi-convenient");
}

bool on_coordinate_axis(const Edge& e) {
    return (e.start.beta == 0 && e.end.beta == 0) ||
           (e.start.alpha == 0 && e.end.alpha == 0);
}

} // namespace

WeightVector canonical_weight(WeightVector w) {
    if (w.p < 0 || (w.p == 0 && w.q < 0)) return -w;
    return w;
}

std::vector<WeightVector> antipodal_pairs(const LatticePolygon& poly) {
    const std::vector<Edge> edges = edges_of(poly);
    if (poly.vertices.size() == 2)
        return {canonical_weight(edges[0].normal)};
    std::vector<WeightVector> normals;
    normals.reserve(edges.size());
    for (const Edge& e : edges) normals.push_back(e.normal);
    std::sort(normals.begin(), normals.end());
    std::vector<WeightVector> out;
    for (const WeightVector& n : normals) {
        const WeightVector c = canonical_weight(n);
        if (c != n) continue; // count each direction once, at its representative
        if (std::binary_search(normals.begin(), normals.end(), -n)) out.push_back(c);
    }
    return out;
}

std::optional<Violation> check_nondegenerate_at_infinity(const Polynomial& f) {
    require_quasi_convenient(f);
    for (const Edge& e : edges_of(newton_diagram(f))) {
        if (e.normal.p <= 0 && e.normal.q <= 0) continue;
        if (has_singular_torus_zero(face_polynomial(f, e.normal)))
            return Violation{ViolationKind::DEGENERATE_AT_INFINITY, e.normal, e};
    }
    return std::nullopt;
}

std::optional<Violation> check_pair_nondegenerate(const Polynomial& f, const Polynomial& g) {
    require_quasi_convenient(f);
    require_quasi_convenient(g);
    std::vector<WeightVector> candidates;
    std::vector<Edge> candidate_faces;
    for (const Polynomial* h : {&f, &g}) {
        for (const Edge& e : edges_of(newton_diagram(*h))) {
            if (e.normal.p <= 0 && e.normal.q <= 0) continue;
            if (std::find(candidates.begin(), candidates.end(), e.normal) ==
                candidates.end()) {
                candidates.push_back(e.normal);
                candidate_faces.push_back(e);
            }
        }
    }
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        const WeightVector w = candidates[i];
        const UnivariatePoly a = face_polynomial(f, w).phi.strip_power_factor();
        const UnivariatePoly b = face_polynomial(g, w).phi.strip_power_factor();
        if (a.is_constant() || b.is_constant()) continue;
        if (!univ_gcd(a, b).is_constant())
            return Violation{ViolationKind::DEGENERATE_AT_INFINITY, w, candidate_faces[i]};
    }
    return std::nullopt;
}

std::optional<Violation> check_negative_slope_shape(const Polynomial& f) {
    require_quasi_convenient(f);
    const LatticePolygon diagram = newton_diagram(f);
    const std::vector<Edge> edges = edges_of(diagram);
    if (diagram.vertices.size() < 3) {
        // A point or segment diagram cannot be certified by shape alone.
        if (edges.empty())
            return Violation{ViolationKind::POSITIVE_SLOPE_FACE, std::nullopt, std::nullopt};
        return Violation{ViolationKind::POSITIVE_SLOPE_FACE, edges[0].normal, edges[0]};
    }
    for (const Edge& e : edges) {
        if (on_coordinate_axis(e)) continue;
        if (e.normal.p <= 0 || e.normal.q <= 0)
            return Violation{ViolationKind::POSITIVE_SLOPE_FACE, e.normal, e};
    }
    return std::nullopt;
}

std::optional<Violation> check_antipodal_condition(const Polynomial& f) {
    require_quasi_convenient(f);
    const LatticePolygon diagram = newton_diagram(f);
    const std::vector<Edge> edges = edges_of(diagram);
    for (const WeightVector& w : antipodal_pairs(diagram)) {
        if (w.p * w.q > 0) continue; // the pair condition only covers p*q <= 0
        if (antipodal_common_torus_zero(face_polynomial(f, w), face_polynomial(f, -w))) {
            const auto it = std::find_if(edges.begin(), edges.end(),
                                         [&](const Edge& e) { return e.normal == w; });
            return Violation{ViolationKind::ANTIPODAL_CONDITION_FAILS, w,
                             it == edges.end() ? std::optional<Edge>() : *it};
        }
    }
    return std::nullopt;
}

Verdict check_nearly_irreducible(const Polynomial& f) {
    if (f.is_zero() || f.is_constant())
        throw DomainError("verdict requires a polynomial of positive degree");
    if (!is_quasi_convenient(f)) {
        return {VerdictStatus::NOT_APPLICABLE, CriterionPath::NONE,
                {Violation{ViolationKind::NOT_QUASI_CONVENIENT, std::nullopt, std::nullopt}}};
    }

    std::vector<Violation> witnesses;
    if (auto v = check_nondegenerate_at_infinity(f)) witnesses.push_back(*v);
    if (auto v = check_antipodal_condition(f)) witnesses.push_back(*v);
    if (!witnesses.empty())
        return {VerdictStatus::UNKNOWN, CriterionPath::NONE, std::move(witnesses)};

    CriterionPath via = CriterionPath::ANTIPODAL_CONDITION;
    if (antipodal_pairs(newton_diagram(f)).empty())
        via = CriterionPath::NO_PARALLEL_FACES;
    else if (!check_negative_slope_shape(f))
        via = CriterionPath::NEGATIVE_SLOPE_SHAPE;
    return {VerdictStatus::NEARLY_IRREDUCIBLE, via, {}};
}

} // namespace nearirr
