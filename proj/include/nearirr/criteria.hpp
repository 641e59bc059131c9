#ifndef NEARIRR_CRITERIA_HPP
#define NEARIRR_CRITERIA_HPP

#include "nearirr/geometry.hpp"
#include "nearirr/polynomial.hpp"

#include <optional>
#include <vector>

namespace nearirr {

enum class ViolationKind {
    NOT_QUASI_CONVENIENT,
    DEGENERATE_AT_INFINITY,
    ANTIPODAL_CONDITION_FAILS,
    POSITIVE_SLOPE_FACE,
};

/// Why a criterion failed; weight and face locate the offending direction.
struct Violation {
    ViolationKind kind;
    std::optional<WeightVector> weight;
    std::optional<Edge> face;
};

enum class VerdictStatus { NEARLY_IRREDUCIBLE, UNKNOWN, NOT_APPLICABLE };

/// Which sufficient criterion certified the verdict.
enum class CriterionPath {
    NO_PARALLEL_FACES,    // no antipodal edge pair: the pair condition is vacuous
    NEGATIVE_SLOPE_SHAPE, // all non-axis faces have strictly positive normals
    ANTIPODAL_CONDITION,  // every antipodal pair passed the common-zero test
    NONE,
};

/// Outcome of check_nearly_irreducible. The criteria are sufficient, never
/// necessary, so failures yield UNKNOWN with witnesses rather than a
/// negative verdict.
struct Verdict {
    VerdictStatus status = VerdictStatus::UNKNOWN;
    CriterionPath via = CriterionPath::NONE;
    std::vector<Violation> witnesses;
};

/// Flips w so that p > 0, or p = 0 and q > 0. Antipodal edge pairs are
/// reported once, under this representative.
WeightVector canonical_weight(WeightVector w);

/// Canonical weights of the antipodal edge-normal pairs of poly (a segment
/// counts as one pair). Sorted; empty for points and for polygons without
/// parallel edges.
std::vector<WeightVector> antipodal_pairs(const LatticePolygon& poly);

/// Checks every face with outward normal p > 0 or q > 0 for a singular
/// torus zero of its initial form; quasi-convenience makes those faces
/// exactly the candidate directions. nullopt = nondegenerate. f must be
/// quasi-convenient.
std::optional<Violation> check_nondegenerate_at_infinity(const Polynomial& f);

/// Same sweep for a pair: a direction degenerates when the two face
/// polynomials share a nonzero root. Both inputs quasi-convenient.
std::optional<Violation> check_pair_nondegenerate(const Polynomial& f, const Polynomial& g);

/// Shape test: every face not on a coordinate axis must have outward normal
/// with p > 0 and q > 0. Degenerate (point or segment) diagrams fail: the
/// axis-segment exemption would otherwise certify polynomials like X^2 - 1
/// whose factors never meet. f quasi-convenient.
std::optional<Violation> check_negative_slope_shape(const Polynomial& f);

/// For every antipodal face pair whose normal has p*q <= 0, checks that the
/// two initial forms have no common torus zero. f quasi-convenient.
std::optional<Violation> check_antipodal_condition(const Polynomial& f);

/// Full pipeline: NOT_APPLICABLE without quasi-convenience, UNKNOWN with
/// witnesses when nondegeneracy or the antipodal condition fails, otherwise
/// NEARLY_IRREDUCIBLE with the strongest applicable path recorded.
/// f nonzero of positive degree.
Verdict check_nearly_irreducible(const Polynomial& f);

} // namespace nearirr

#endif
