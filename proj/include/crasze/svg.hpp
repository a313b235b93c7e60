#pragma once

#include "crasze/rszd.hpp"

#include <string>

namespace crasze {

/// SVG 1.1 rendering of an instance and its zone layout: target circles,
/// feasible boundary arcs, zone vertices and centers, and the two depots.
/// Coordinates are the instance's own (y grows upward).
std::string layout_svg(const Instance& inst, const SzLayout& layout);

/// layout_svg plus the solution's depot-to-depot waypoint polyline.
std::string solution_svg(const Instance& inst, const SzLayout& layout, const Solution& sol);

}  // namespace crasze
