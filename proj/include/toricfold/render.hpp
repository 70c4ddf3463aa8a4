#pragma once

// SVG picture of a fan: lattice dots over the bounding box of the ray
// generators (and the origin) widened by one unit, and one arrow per ray.

#include <string>

#include "toricfold/fan.hpp"

namespace toricfold {

inline constexpr int kSvgUnit = 40;  // pixels per lattice unit

std::string render_svg(const Fan2D& f);

}  // namespace toricfold
