#pragma once

#include <span>
#include <string>

#include "pcd/gamma.hpp"
#include "pcd/proximity.hpp"

namespace pcd {

/// 800x800 SVG: partition cells in gray, triangle outline in black, region
/// pieces shaded, sample points as dots. `g` may be null.
std::string render_svg(const ProximityMapSpec& spec, std::span<const Point2> sample, const Gamma1Region* g);

}  // namespace pcd
