#pragma once

#include <string>

#include "tileflip/experiments.hpp"
#include "tileflip/height.hpp"
#include "tileflip/tiling.hpp"

namespace tileflip {

enum class Overlay { none, heights, anchors };

struct RenderOptions {
    int cell_pixel_size = 16;
    Overlay overlay = Overlay::none;
};

// Deterministic SVG: one rect per tile, palette keyed by tile side,
// optional vertex-height labels or anchor dots.
std::string render_svg(const Tiling& t, const RenderOptions& opts);

// Plain PGM (P2), 0..255 grayscale of the s-tile coverage fraction.
std::string render_pgm(const OccupancyMap& m);

}  // namespace tileflip
