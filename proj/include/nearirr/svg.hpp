#ifndef NEARIRR_SVG_HPP
#define NEARIRR_SVG_HPP

#include "nearirr/geometry.hpp"

#include <string>
#include <vector>

namespace nearirr {

/// SVG 1.1 rendering of a Newton diagram: lattice grid, filled polygon (or
/// segment / single point), support points, outward-normal labels, and the
/// edges whose normals appear in `highlight` drawn in an accent stroke.
/// The viewBox fits the diagram with one lattice unit of margin. Output is
/// a pure function of the inputs.
std::string render_svg(const LatticePolygon& diagram, const std::vector<Edge>& edges,
                       const std::vector<LatticePoint>& support,
                       const std::vector<WeightVector>& highlight);

} // namespace nearirr

#endif
