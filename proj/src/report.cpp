#include "nearirr/report.hpp"

#include "nearirr/expr.hpp"

namespace nearirr {

std::string violation_kind_name(ViolationKind kind) {
    switch (kind) {
    case ViolationKind::NOT_QUASI_CONVENIENT: return "NOT_QUASI_CONVENIENT";
    case ViolationKind::DEGENERATE_AT_INFINITY: return "DEGENERATE_AT_INFINITY";
    case ViolationKind::ANTIPODAL_CONDITION_FAILS: return "ANTIPODAL_CONDITION_FAILS";
    case ViolationKind::POSITIVE_SLOPE_FACE: return "POSITIVE_SLOPE_FACE";
    }
    return "UNKNOWN_KIND";
}

std::string verdict_status_name(VerdictStatus status) {
    switch (status) {
    case VerdictStatus::NEARLY_IRREDUCIBLE: return "NEARLY_IRREDUCIBLE";
    case VerdictStatus::UNKNOWN: return "UNKNOWN";
    case VerdictStatus::NOT_APPLICABLE: return "NOT_APPLICABLE";
    }
    return "UNKNOWN_STATUS";
}

std::string criterion_path_name(CriterionPath via) {
    switch (via) {
    case CriterionPath::NO_PARALLEL_FACES: return "NO_PARALLEL_FACES";
    case CriterionPath::NEGATIVE_SLOPE_SHAPE: return "NEGATIVE_SLOPE_SHAPE";
    case CriterionPath::ANTIPODAL_CONDITION: return "ANTIPODAL_CONDITION";
    case CriterionPath::NONE: return "NONE";
    }
    return "UNKNOWN_PATH";
}

Json point_json(LatticePoint pt) { return Json::array({pt.alpha, pt.beta}); }

Json weight_json(WeightVector w) { return Json::array({w.p, w.q}); }

Json violation_json(const Violation& v) {
    Json out;
    out["kind"] = violation_kind_name(v.kind);
    if (v.weight) out["weight"] = weight_json(*v.weight);
    if (v.face) {
        Json face;
        face["start"] = point_json(v.face->start);
        face["end"] = point_json(v.face->end);
        out["face"] = face;
    }
    return out;
}

Json verdict_json(const Verdict& verdict) {
    Json out;
    out["status"] = verdict_status_name(verdict.status);
    out["via"] = criterion_path_name(verdict.via);
    Json witnesses = Json::array();
    for (const Violation& v : verdict.witnesses) witnesses.push_back(violation_json(v));
    out["witnesses"] = witnesses;
    return out;
}

Json kb_json(const KBRecord& rec) {
    Json out;
    out["sum_multiplicities"] = rec.sum_multiplicities;
    out["nu"] = rational_to_string(rec.nu);
    out["pair_nondegenerate"] = rec.pair_nondegenerate;
    out["equality"] = rec.equality;
    return out;
}

Json diagram_json(const Polynomial& f) {
    const LatticePolygon diagram = newton_diagram(f);
    Json out;
    Json vertices = Json::array();
    for (const LatticePoint& v : diagram.vertices) vertices.push_back(point_json(v));
    out["vertices"] = vertices;
    out["doubled_area"] = doubled_area(diagram);
    Json edges = Json::array();
    for (const Edge& e : edges_of(diagram)) {
        const FacePolynomial fp = face_polynomial(f, e.normal);
        Json ej;
        ej["start"] = point_json(e.start);
        ej["end"] = point_json(e.end);
        ej["normal"] = weight_json(e.normal);
        ej["lattice_length"] = e.lattice_length;
        Json face;
        face["base"] = point_json(fp.base);
        Json coeffs = Json::array();
        for (const Rational& c : fp.phi.coeffs()) coeffs.push_back(rational_to_string(c));
        face["coefficients"] = coeffs;
        ej["face_poly"] = face;
        edges.push_back(ej);
    }
    out["edges"] = edges;
    return out;
}

Json check_report(const Polynomial& f) {
    Json out;
    out["input"] = format_polynomial(f);
    const bool qc = is_quasi_convenient(f);
    out["quasi_convenient"] = qc;

    const Json diagram = diagram_json(f);
    out["diagram"] = {{"vertices", diagram["vertices"]},
                      {"doubled_area", diagram["doubled_area"]}};
    out["edges"] = diagram["edges"];

    std::vector<Violation> violations;
    if (!qc) {
        out["nondegenerate_at_infinity"] = nullptr;
        out["antipodal_condition_holds"] = nullptr;
        out["negative_slope_shape"] = nullptr;
        out["verdict"] = verdict_json(check_nearly_irreducible(f));
        violations.push_back({ViolationKind::NOT_QUASI_CONVENIENT, std::nullopt, std::nullopt});
    } else {
        const auto nondeg = check_nondegenerate_at_infinity(f);
        const auto antipodal = check_antipodal_condition(f);
        const auto shape = check_negative_slope_shape(f);
        out["nondegenerate_at_infinity"] = !nondeg.has_value();
        out["antipodal_condition_holds"] = !antipodal.has_value();
        out["negative_slope_shape"] = !shape.has_value();
        out["verdict"] = verdict_json(check_nearly_irreducible(f));
        if (nondeg) violations.push_back(*nondeg);
        if (antipodal) violations.push_back(*antipodal);
        if (shape) violations.push_back(*shape);
    }
    Json vio = Json::array();
    for (const Violation& v : violations) vio.push_back(violation_json(v));
    out["violations"] = vio;
    return out;
}

Json error_json(const std::string& kind, const std::string& message) {
    Json out;
    out["error"] = kind;
    out["message"] = message;
    return out;
}

} // namespace nearirr
