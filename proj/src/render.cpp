#include "tileflip/render.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace tileflip {

namespace {
const char* tile_fill(const Tiling& t, int side) {
    if (side == t.s()) return "#4a90d9";
    if (side == 1 && t.m() == 1) return "#f2f2f2";
    return "#d9d9d9";
}
}  // namespace

std::string render_svg(const Tiling& t, const RenderOptions& opts) {
    if (opts.cell_pixel_size <= 0) throw std::invalid_argument("cell pixel size must be positive");
    const Region& reg = t.region();
    const int px = opts.cell_pixel_size;
    const int W = reg.bbox_w() * px, H = reg.bbox_h() * px;
    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
        << "\" viewBox=\"0 0 " << W << " " << H << "\">\n";
    // SVG y runs downward; lattice y runs upward.
    auto sx = [&](int x) { return (x - reg.origin_x()) * px; };
    auto sy = [&](int y) { return H - (y - reg.origin_y()) * px; };
    for (const Tile& tile : t.tiles()) {
        svg << "<rect x=\"" << sx(tile.anchor.x) << "\" y=\"" << sy(tile.anchor.y + tile.side)
            << "\" width=\"" << tile.side * px << "\" height=\"" << tile.side * px
            << "\" fill=\"" << tile_fill(t, tile.side)
            << "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
    }
    if (opts.overlay == Overlay::heights) {
        if (reg.is_torus()) throw std::invalid_argument("height overlay needs a flat region");
        HeightField field = vertex_heights(t);
        int fs = std::max(6, px / 2);
        for (Vertex v : field.vertices()) {
            svg << "<text x=\"" << sx(v.x) + 2 << "\" y=\"" << sy(v.y) - 2 << "\" font-size=\""
                << fs << "\" fill=\"#b00000\">" << field.height(v) << "</text>\n";
        }
    } else if (opts.overlay == Overlay::anchors) {
        for (const Tile& tile : t.tiles())
            svg << "<circle cx=\"" << sx(tile.anchor.x) + px / 4 << "\" cy=\""
                << sy(tile.anchor.y) - px / 4 << "\" r=\"" << std::max(1, px / 8)
                << "\" fill=\"#b00000\"/>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

std::string render_pgm(const OccupancyMap& m) {
    std::ostringstream out;
    out << "P2\n" << m.w << " " << m.h << "\n255\n";
    // Top row first.
    for (int y = m.h - 1; y >= 0; --y) {
        for (int x = 0; x < m.w; ++x) {
            double f = m.frac[static_cast<size_t>(y) * m.w + x];
            int v = f < 0 ? 0 : static_cast<int>(std::lround(f * 255.0));
            out << v << (x + 1 == m.w ? "" : " ");
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace tileflip
