#pragma once

#include "secant/bounds.hpp"

#include <string>

namespace secant::render {

// Deterministic SVG of a planar configuration, points coloured by winning
// player, ties hollow, sites drawn as diamonds. Supported projections:
// ambient dimension 1 or 2 drawn directly, and ambient dimension 3 with a
// constant coordinate sum (the dilated-simplex plane). Anything else raises
// a mismatch_error.
std::string render_svg(const models::PointConfig& config, const bounds::Witness& w,
                       const bounds::PartitionResult& result);

}  // namespace secant::render
