#include "nearirr/geometry.hpp"

#include "nearirr/errors.hpp"

#include <algorithm>
#include <numeric>

namespace nearirr {

namespace {

constexpr std::int64_t kMaxWeightComponent = 1'000'000'000;

std::int64_t dot(WeightVector w, LatticePoint pt) {
    return w.p * pt.alpha + w.q * pt.beta;
}

// Primitive direction and lattice length of the nonzero vector d.
std::pair<LatticePoint, std::int64_t> primitive_direction(LatticePoint d) {
    const std::int64_t g = std::gcd(d.alpha < 0 ? -d.alpha : d.alpha,
                                    d.beta < 0 ? -d.beta : d.beta);
    return {{d.alpha / g, d.beta / g}, g};
}

// Outward normal of a CCW edge: direction rotated by -90 degrees.
WeightVector outward_normal(LatticePoint primitive_dir) {
    return {primitive_dir.beta, -primitive_dir.alpha};
}

} // namespace

WeightVector primitive_weight(std::int64_t p, std::int64_t q) {
    if (p == 0 && q == 0) throw DomainError("weight vector must be nonzero");
    if (p < -kMaxWeightComponent || p > kMaxWeightComponent || q < -kMaxWeightComponent ||
        q > kMaxWeightComponent)
        throw DomainError("weight component out of range");
    const std::int64_t g = std::gcd(p < 0 ? -p : p, q < 0 ? -q : q);
    return {p / g, q / g};
}

LatticePolygon convex_hull(std::vector<LatticePoint> points) {
    std::sort(points.begin(), points.end(), [](LatticePoint a, LatticePoint b) {
        return a.alpha != b.alpha ? a.alpha < b.alpha : a.beta < b.beta;
    });
    points.erase(std::unique(points.begin(), points.end()), points.end());
    if (points.size() <= 2) return {std::move(points)};

    // Monotone chain; strict turns only, so collinear points are elided.
    std::vector<LatticePoint> hull(2 * points.size());
    std::size_t k = 0;
    for (const LatticePoint& pt : points) {
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], pt) <= 0) --k;
        hull[k++] = pt;
    }
    const std::size_t lower_end = k + 1;
    for (auto it = points.rbegin() + 1; it != points.rend(); ++it) {
        while (k >= lower_end && cross(hull[k - 2], hull[k - 1], *it) <= 0) --k;
        hull[k++] = *it;
    }
    hull.resize(k - 1); // last point repeats the first
    return {std::move(hull)};
}

LatticePolygon newton_diagram(const Polynomial& f) {
    if (f.is_zero()) throw DomainError("Newton diagram of the zero polynomial");
    std::vector<LatticePoint> pts = f.support();
    pts.push_back({0, 0});
    return convex_hull(std::move(pts));
}

std::vector<Edge> edges_of(const LatticePolygon& poly) {
    const auto& v = poly.vertices;
    if (v.size() < 2) return {};
    if (v.size() == 2) {
        const auto [dir, len] = primitive_direction(v[1] - v[0]);
        const WeightVector n = outward_normal(dir);
        return {{v[0], v[1], n, len}, {v[1], v[0], -n, len}};
    }
    std::vector<Edge> out;
    out.reserve(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        const LatticePoint a = v[i];
        const LatticePoint b = v[(i + 1) % v.size()];
        const auto [dir, len] = primitive_direction(b - a);
        out.push_back({a, b, outward_normal(dir), len});
    }
    return out;
}

std::int64_t doubled_area(const LatticePolygon& poly) {
    const auto& v = poly.vertices;
    std::int64_t acc = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const LatticePoint a = v[i];
        const LatticePoint b = v[(i + 1) % v.size()];
        acc += a.alpha * b.beta - b.alpha * a.beta;
    }
    return acc;
}

LatticePolygon minkowski_sum(const LatticePolygon& a, const LatticePolygon& b) {
    std::vector<LatticePoint> sums;
    sums.reserve(a.vertices.size() * b.vertices.size());
    for (const LatticePoint& pa : a.vertices)
        for (const LatticePoint& pb : b.vertices) sums.push_back(pa + pb);
    return convex_hull(std::move(sums));
}

std::int64_t d_w(const Polynomial& f, WeightVector w) {
    if (f.is_zero()) throw DomainError("support value of the zero polynomial");
    bool first = true;
    std::int64_t best = 0;
    for (const auto& [e, c] : f.terms()) {
        const std::int64_t val = dot(w, e);
        if (first || val > best) best = val;
        first = false;
    }
    return best;
}

Polynomial init_form(const Polynomial& f, WeightVector w) {
    const std::int64_t d = d_w(f, w);
    Polynomial out;
    for (const auto& [e, c] : f.terms())
        if (dot(w, e) == d) out.add_term(e, c);
    return out;
}

bool is_quasi_convenient(const Polynomial& f) {
    if (f.is_zero()) throw DomainError("quasi-convenience of the zero polynomial");
    bool alpha_axis = false;
    bool beta_axis = false;
    for (const auto& [e, c] : f.terms()) {
        if (e.beta == 0) alpha_axis = true;
        if (e.alpha == 0) beta_axis = true;
    }
    return alpha_axis && beta_axis;
}

Rational nu_infinity(const Polynomial& f, const Polynomial& g) {
    if (f.is_zero() || f.is_constant() || g.is_zero() || g.is_constant())
        throw DomainError("area defect requires factors of positive degree");
    if (!is_quasi_convenient(f) || !is_quasi_convenient(g))
        throw DomainError("area defect requires quasi-convenient factors");
    const std::int64_t product_area = doubled_area(newton_diagram(f * g));
    const std::int64_t f_area = doubled_area(newton_diagram(f));
    const std::int64_t g_area = doubled_area(newton_diagram(g));
    return Rational(product_area - f_area - g_area, 2);
}

std::optional<WeightVector> is_segment_through_origin(const LatticePolygon& poly) {
    if (poly.vertices.size() != 2) return std::nullopt;
    if (poly.vertices[0] != LatticePoint{0, 0} && poly.vertices[1] != LatticePoint{0, 0})
        return std::nullopt;
    WeightVector n = outward_normal(
        primitive_direction(poly.vertices[1] - poly.vertices[0]).first);
    if (n.p < 0 || (n.p == 0 && n.q < 0)) n = -n;
    return n;
}

} // namespace nearirr
