#include "nearirr/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace nearirr {

namespace {

constexpr std::int64_t kUnit = 40; // pixels per lattice step

struct Frame {
    std::int64_t min_alpha, max_alpha, min_beta, max_beta;

    std::int64_t x(std::int64_t alpha) const { return (alpha - min_alpha + 1) * kUnit; }
    std::int64_t y(std::int64_t beta) const { return (max_beta - beta + 1) * kUnit; }
    double xd(double alpha) const { return (alpha - static_cast<double>(min_alpha) + 1) * kUnit; }
    double yd(double beta) const { return (static_cast<double>(max_beta) - beta + 1) * kUnit; }
    std::int64_t width() const { return (max_alpha - min_alpha + 2) * kUnit; }
    std::int64_t height() const { return (max_beta - min_beta + 2) * kUnit; }
};

std::string fixed2(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

} // namespace

std::string render_svg(const LatticePolygon& diagram, const std::vector<Edge>& edges,
                       const std::vector<LatticePoint>& support,
                       const std::vector<WeightVector>& highlight) {
    Frame fr{0, 1, 0, 1};
    bool first = true;
    auto grow = [&](LatticePoint pt) {
        if (first) {
            fr = {pt.alpha, pt.alpha, pt.beta, pt.beta};
            first = false;
            return;
        }
        fr.min_alpha = std::min(fr.min_alpha, pt.alpha);
        fr.max_alpha = std::max(fr.max_alpha, pt.alpha);
        fr.min_beta = std::min(fr.min_beta, pt.beta);
        fr.max_beta = std::max(fr.max_beta, pt.beta);
    };
    for (const LatticePoint& v : diagram.vertices) grow(v);
    for (const LatticePoint& s : support) grow(s);

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"0 0 "
        << fr.width() << ' ' << fr.height() << "\">\n";

    // Lattice grid.
    for (std::int64_t a = fr.min_alpha; a <= fr.max_alpha; ++a)
        out << "  <line x1=\"" << fr.x(a) << "\" y1=\"0\" x2=\"" << fr.x(a) << "\" y2=\""
            << fr.height() << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
    for (std::int64_t b = fr.min_beta; b <= fr.max_beta; ++b)
        out << "  <line x1=\"0\" y1=\"" << fr.y(b) << "\" x2=\"" << fr.width() << "\" y2=\""
            << fr.y(b) << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";

    // Diagram body.
    const auto& v = diagram.vertices;
    if (v.size() >= 3) {
        out << "  <polygon points=\"";
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) out << ' ';
            out << fr.x(v[i].alpha) << ',' << fr.y(v[i].beta);
        }
        out << "\" fill=\"#cfe3f5\" stroke=\"#2a6fa8\" stroke-width=\"2\"/>\n";
    } else if (v.size() == 2) {
        out << "  <line x1=\"" << fr.x(v[0].alpha) << "\" y1=\"" << fr.y(v[0].beta)
            << "\" x2=\"" << fr.x(v[1].alpha) << "\" y2=\"" << fr.y(v[1].beta)
            << "\" stroke=\"#2a6fa8\" stroke-width=\"2\"/>\n";
    }

    // Highlighted edges on top of the body stroke.
    for (const Edge& e : edges) {
        if (std::find(highlight.begin(), highlight.end(), e.normal) == highlight.end())
            continue;
        out << "  <line x1=\"" << fr.x(e.start.alpha) << "\" y1=\"" << fr.y(e.start.beta)
            << "\" x2=\"" << fr.x(e.end.alpha) << "\" y2=\"" << fr.y(e.end.beta)
            << "\" stroke=\"#d62728\" stroke-width=\"4\"/>\n";
    }

    // Support points, then diagram vertices (a vertex may also be support).
    for (const LatticePoint& s : support)
        out << "  <circle cx=\"" << fr.x(s.alpha) << "\" cy=\"" << fr.y(s.beta)
            << "\" r=\"5\" fill=\"#1f3b57\"/>\n";
    for (const LatticePoint& pt : v)
        out << "  <circle cx=\"" << fr.x(pt.alpha) << "\" cy=\"" << fr.y(pt.beta)
            << "\" r=\"3\" fill=\"#2a6fa8\"/>\n";

    // Normal labels at edge midpoints, nudged outward.
    for (const Edge& e : edges) {
        const double mx = (e.start.alpha + e.end.alpha) / 2.0;
        const double my = (e.start.beta + e.end.beta) / 2.0;
        const double norm = std::sqrt(static_cast<double>(e.normal.p) * e.normal.p +
                                      static_cast<double>(e.normal.q) * e.normal.q);
        const double lx = mx + 0.55 * e.normal.p / norm;
        const double ly = my + 0.55 * e.normal.q / norm;
        out << "  <text x=\"" << fixed2(fr.xd(lx)) << "\" y=\"" << fixed2(fr.yd(ly))
            << "\" font-family=\"monospace\" font-size=\"13\" fill=\"#333333\" "
               "text-anchor=\"middle\" dominant-baseline=\"middle\">[" << e.normal.p << ','
            << e.normal.q << "]</text>\n";
    }

    out << "</svg>\n";
    return out.str();
}

} // namespace nearirr
