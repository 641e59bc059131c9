#ifndef NEARIRR_REPORT_HPP
#define NEARIRR_REPORT_HPP

#include "nearirr/criteria.hpp"
#include "nearirr/faces.hpp"
#include "nearirr/geometry.hpp"
#include "nearirr/oracle.hpp"
#include "nearirr/polynomial.hpp"

#include "json.hpp"

#include <string>

namespace nearirr {

/// All report builders emit ordered JSON so identical inputs serialize to
/// byte-identical documents. Rationals appear as strings "p" or "p/q";
/// lattice points and weights as two-element arrays.

using Json = nlohmann::ordered_json;

std::string violation_kind_name(ViolationKind kind);
std::string verdict_status_name(VerdictStatus status);
std::string criterion_path_name(CriterionPath via);

Json point_json(LatticePoint pt);
Json weight_json(WeightVector w);
Json violation_json(const Violation& v);
Json verdict_json(const Verdict& verdict);
Json kb_json(const KBRecord& rec);

/// Diagram block: vertices, doubled area, and per-edge face data.
Json diagram_json(const Polynomial& f);

/// Full `check` report: input echo, criterion flags, diagram, verdict, and
/// every violation encountered (including informational shape violations).
Json check_report(const Polynomial& f);

/// Structured error document for stderr.
Json error_json(const std::string& kind, const std::string& message);

} // namespace nearirr

#endif
