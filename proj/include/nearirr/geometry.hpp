#ifndef NEARIRR_GEOMETRY_HPP
#define NEARIRR_GEOMETRY_HPP

#include "nearirr/polynomial.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

namespace nearirr {

/// Primitive integer direction (p, q) != (0, 0), gcd(|p|, |q|) = 1.
struct WeightVector {
    std::int64_t p = 0;
    std::int64_t q = 0;

    friend auto operator<=>(const WeightVector&, const WeightVector&) = default;
};

inline WeightVector operator-(WeightVector w) { return {-w.p, -w.q}; }

/// Reduces (p, q) to its primitive representative. Components are capped at
/// 10^9 in absolute value so every later dot product fits in 64 bits.
WeightVector primitive_weight(std::int64_t p, std::int64_t q);

/// Convex lattice polygon, vertices in CCW order starting at the
/// lexicographically smallest vertex, no three consecutive collinear.
/// Degenerates to 2 vertices (segment) or 1 vertex (point).
struct LatticePolygon {
    std::vector<LatticePoint> vertices;

    friend bool operator==(const LatticePolygon&, const LatticePolygon&) = default;
};

/// One side of a polygon, traversed CCW; normal is the outward primitive
/// normal (the CCW direction rotated by -90 degrees), and
/// end - start = lattice_length * (normal rotated by +90 degrees).
struct Edge {
    LatticePoint start;
    LatticePoint end;
    WeightVector normal;
    std::int64_t lattice_length = 1;
};

/// Convex hull (monotone chain), collinear points elided.
LatticePolygon convex_hull(std::vector<LatticePoint> points);

/// Hull of supp f together with the origin. f nonzero.
LatticePolygon newton_diagram(const Polynomial& f);

/// CCW edge list. A segment yields its two orientations (one per outward
/// normal); a point yields no edges.
std::vector<Edge> edges_of(const LatticePolygon& poly);

/// Shoelace value, twice the Euclidean area; 0 for segments and points.
std::int64_t doubled_area(const LatticePolygon& poly);

LatticePolygon minkowski_sum(const LatticePolygon& a, const LatticePolygon& b);

/// max{p*alpha + q*beta} over supp f. May be negative. f nonzero.
std::int64_t d_w(const Polynomial& f, WeightVector w);

/// Sum of the terms of f attaining d_w(f). f nonzero.
Polynomial init_form(const Polynomial& f, WeightVector w);

/// True iff supp f meets both coordinate axes (a constant term counts for
/// both). f nonzero.
bool is_quasi_convenient(const Polynomial& f);

/// Area defect of the product diagram: area(D(f*g)) - area(D(f)) - area(D(g)).
/// Nonnegative. Both inputs must be nonzero, of positive degree, and
/// quasi-convenient.
Rational nu_infinity(const Polynomial& f, const Polynomial& g);

/// If poly is a segment with one endpoint at the origin, the primitive
/// normal of its supporting line, oriented with p > 0, or q > 0 when p = 0.
std::optional<WeightVector> is_segment_through_origin(const LatticePolygon& poly);

} // namespace nearirr

#endif
