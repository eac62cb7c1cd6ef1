#include "tileflip/region.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace tileflip {

namespace {
int mod_pos(int v, int n) {
    v %= n;
    return v < 0 ? v + n : v;
}
}  // namespace

bool Region::contains(Cell c) const {
    if (is_torus()) return true;
    int x = c.x - ox_, y = c.y - oy_;
    if (x < 0 || y < 0 || x >= w_ || y >= h_) return false;
    return inside_[static_cast<size_t>(y) * w_ + x] != 0;
}

Cell Region::wrap(Cell c) const {
    if (!is_torus()) return c;
    return {mod_pos(c.x, torus_n_), mod_pos(c.y, torus_n_)};
}

std::vector<Cell> Region::cells() const {
    std::vector<Cell> out;
    out.reserve(static_cast<size_t>(cell_count_));
    for (int y = 0; y < h_; ++y)
        for (int x = 0; x < w_; ++x)
            if (inside_[static_cast<size_t>(y) * w_ + x])
                out.push_back({ox_ + x, oy_ + y});
    return out;
}

int Region::cells_at_vertex(Vertex v) const {
    int n = 0;
    for (int dy = -1; dy <= 0; ++dy)
        for (int dx = -1; dx <= 0; ++dx)
            if (contains(wrap({v.x + dx, v.y + dy}))) ++n;
    return n;
}

bool Region::is_boundary_vertex(Vertex v) const {
    if (is_torus()) return false;
    int n = cells_at_vertex(v);
    return n >= 1 && n < 4;
}

void Region::finalize(bool check_simply_connected) {
    cell_count_ = 0;
    for (uint8_t b : inside_) cell_count_ += b;
    if (cell_count_ == 0) throw std::invalid_argument("region is empty");

    if (topology_ == Topology::flat && check_simply_connected) {
        // 4-connectivity of the cells.
        std::vector<uint8_t> seen(inside_.size(), 0);
        std::vector<int> stack;
        int start = -1;
        for (size_t i = 0; i < inside_.size(); ++i)
            if (inside_[i]) {
                start = static_cast<int>(i);
                break;
            }
        stack.push_back(start);
        seen[start] = 1;
        long long reached = 0;
        while (!stack.empty()) {
            int i = stack.back();
            stack.pop_back();
            ++reached;
            int x = i % w_, y = i / w_;
            const int nx[4] = {x + 1, x - 1, x, x};
            const int ny[4] = {y, y, y + 1, y - 1};
            for (int k = 0; k < 4; ++k) {
                if (nx[k] < 0 || ny[k] < 0 || nx[k] >= w_ || ny[k] >= h_) continue;
                int j = ny[k] * w_ + nx[k];
                if (inside_[j] && !seen[j]) {
                    seen[j] = 1;
                    stack.push_back(j);
                }
            }
        }
        if (reached != cell_count_)
            throw std::invalid_argument("region cells are not 4-connected");

        // No holes: flood the complement within a 1-cell margin and require
        // every outside cell to be reached.
        const int W = w_ + 2, H = h_ + 2;
        std::vector<uint8_t> out_seen(static_cast<size_t>(W) * H, 0);
        auto is_in = [&](int x, int y) {
            if (x < 1 || y < 1 || x > w_ || y > h_) return false;
            return inside_[static_cast<size_t>(y - 1) * w_ + (x - 1)] != 0;
        };
        std::vector<std::pair<int, int>> st2{{0, 0}};
        out_seen[0] = 1;
        long long outside_reached = 0;
        while (!st2.empty()) {
            auto [x, y] = st2.back();
            st2.pop_back();
            ++outside_reached;
            const int nx[4] = {x + 1, x - 1, x, x};
            const int ny[4] = {y, y, y + 1, y - 1};
            for (int k = 0; k < 4; ++k) {
                if (nx[k] < 0 || ny[k] < 0 || nx[k] >= W || ny[k] >= H) continue;
                size_t j = static_cast<size_t>(ny[k]) * W + nx[k];
                if (!is_in(nx[k], ny[k]) && !out_seen[j]) {
                    out_seen[j] = 1;
                    st2.push_back({nx[k], ny[k]});
                }
            }
        }
        if (outside_reached != static_cast<long long>(W) * H - cell_count_)
            throw std::invalid_argument("region has holes");
    }

    // Inner vertices, row-major.
    inner_vertices_.clear();
    if (is_torus()) {
        for (int y = 0; y < torus_n_; ++y)
            for (int x = 0; x < torus_n_; ++x) inner_vertices_.push_back({x, y});
        base_vertex_ = {0, 0};
    } else {
        for (int y = oy_; y <= oy_ + h_; ++y)
            for (int x = ox_; x <= ox_ + w_; ++x)
                if (cells_at_vertex({x, y}) == 4) inner_vertices_.push_back({x, y});
        // Lower-left corner of the row-major-first cell.
        for (int y = 0; y < h_ && cell_count_; ++y) {
            bool found = false;
            for (int x = 0; x < w_; ++x)
                if (inside_[static_cast<size_t>(y) * w_ + x]) {
                    base_vertex_ = {ox_ + x, oy_ + y};
                    found = true;
                    break;
                }
            if (found) break;
        }
    }
}

Region Region::rectangle(int w, int h) {
    if (w <= 0 || h <= 0) throw std::invalid_argument("rectangle dimensions must be positive");
    Region r;
    r.topology_ = Topology::flat;
    r.ox_ = r.oy_ = 0;
    r.w_ = w;
    r.h_ = h;
    r.inside_.assign(static_cast<size_t>(w) * h, 1);
    r.spec_.kind = RegionSpec::Kind::rectangle;
    r.spec_.w = w;
    r.spec_.h = h;
    r.finalize(false);
    return r;
}

Region Region::torus(int n) {
    if (n <= 0) throw std::invalid_argument("torus side must be positive");
    Region r;
    r.topology_ = Topology::torus;
    r.torus_n_ = n;
    r.ox_ = r.oy_ = 0;
    r.w_ = r.h_ = n;
    r.inside_.assign(static_cast<size_t>(n) * n, 1);
    r.spec_.kind = RegionSpec::Kind::torus;
    r.spec_.n = n;
    r.finalize(false);
    return r;
}

Region Region::staircase_hexagon(int size, int m, int s) {
    if (size <= 0 || m <= 0 || s <= 0) throw std::invalid_argument("staircase parameters must be positive");
    if (m >= s) throw std::invalid_argument("staircase requires m < s");
    // Horizontal bands of height 2m whose width shrinks by 2s per side per
    // band away from the equator. Each boundary stair advances 2s across and
    // 2m up (slope m/s), which keeps the band grids aligned for m-square
    // tilings; the literal (s, m) stair period leaves the region with an
    // empty or single-tiling flip space.
    const int q = (size - 1) / (4 * s);  // stairs per half-side
    if (q < 1) throw std::invalid_argument("staircase size too small for one stair");
    const int bands = 2 * q + 1;
    Region r;
    r.topology_ = Topology::flat;
    r.ox_ = r.oy_ = 0;
    r.w_ = size;
    r.h_ = bands * 2 * m;
    r.inside_.assign(static_cast<size_t>(r.w_) * r.h_, 0);
    for (int j = 0; j < bands; ++j) {
        int d = j < q ? q - j : j - q;
        int x0 = d * 2 * s, x1 = size - d * 2 * s;
        for (int y = j * 2 * m; y < (j + 1) * 2 * m; ++y)
            for (int x = x0; x < x1; ++x)
                r.inside_[static_cast<size_t>(y) * r.w_ + x] = 1;
    }
    r.spec_.kind = RegionSpec::Kind::staircase_hexagon;
    r.spec_.size = size;
    r.spec_.m = m;
    r.spec_.s = s;
    r.finalize(true);
    return r;
}

Region Region::explicit_cells(std::vector<Cell> cells) {
    if (cells.empty()) throw std::invalid_argument("explicit region is empty");
    int minx = std::numeric_limits<int>::max(), miny = minx;
    int maxx = std::numeric_limits<int>::min(), maxy = maxx;
    for (Cell c : cells) {
        minx = std::min(minx, c.x);
        miny = std::min(miny, c.y);
        maxx = std::max(maxx, c.x);
        maxy = std::max(maxy, c.y);
    }
    Region r;
    r.topology_ = Topology::flat;
    r.ox_ = minx;
    r.oy_ = miny;
    r.w_ = maxx - minx + 1;
    r.h_ = maxy - miny + 1;
    r.inside_.assign(static_cast<size_t>(r.w_) * r.h_, 0);
    for (Cell c : cells) {
        size_t i = static_cast<size_t>(c.y - miny) * r.w_ + (c.x - minx);
        if (r.inside_[i]) throw std::invalid_argument("duplicate cell in explicit region");
        r.inside_[i] = 1;
    }
    r.spec_.kind = RegionSpec::Kind::explicit_cells;
    std::sort(cells.begin(), cells.end(), [](Cell a, Cell b) {
        return a.y != b.y ? a.y < b.y : a.x < b.x;
    });
    r.spec_.cells = std::move(cells);
    r.finalize(true);
    return r;
}

RegionPtr build_region(const RegionSpec& spec) {
    switch (spec.kind) {
        case RegionSpec::Kind::rectangle:
            return std::make_shared<Region>(Region::rectangle(spec.w, spec.h));
        case RegionSpec::Kind::torus:
            return std::make_shared<Region>(Region::torus(spec.n));
        case RegionSpec::Kind::staircase_hexagon:
            return std::make_shared<Region>(Region::staircase_hexagon(spec.size, spec.m, spec.s));
        case RegionSpec::Kind::explicit_cells:
            return std::make_shared<Region>(Region::explicit_cells(spec.cells));
    }
    throw std::invalid_argument("unknown region spec");
}

}  // namespace tileflip
