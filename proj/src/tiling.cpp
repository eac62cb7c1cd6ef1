#include "tileflip/tiling.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

namespace tileflip {

BlockDims block_dimensions(int m, int s) {
    if (m < 1 || s <= m) throw std::invalid_argument("need 1 <= m < s");
    int p = std::lcm(m, s);
    return BlockDims{p, m + s, m + s, p, p};
}

Tiling::Tiling(RegionPtr region, int m, int s) : region_(std::move(region)), m_(m), s_(s) {
    if (m < 1 || s <= m) throw std::invalid_argument("need 1 <= m < s");
    grid_.assign(static_cast<size_t>(region_->bbox_w()) * region_->bbox_h(), CellRef{});
}

size_t Tiling::idx(Cell c) const {
    c = region_->wrap(c);
    return static_cast<size_t>(c.y - region_->origin_y()) * region_->bbox_w() +
           (c.x - region_->origin_x());
}

uint64_t Tiling::tile_hash(Tile t) const {
    uint64_t k = (static_cast<uint64_t>(static_cast<uint32_t>(t.anchor.x)) << 40) ^
                 (static_cast<uint64_t>(static_cast<uint32_t>(t.anchor.y)) << 8) ^
                 static_cast<uint64_t>(t.side);
    return mix64(k);
}

long long Tiling::tile_potential(Tile t) const {
    // m-tiles contribute the y-coordinates of both horizontal sides,
    // s-tiles the x-coordinates of both vertical sides.
    return t.side == m_ ? 2LL * t.anchor.y + m_ : 2LL * t.anchor.x + s_;
}

void Tiling::place(Tile t) {
    t.anchor = region_->wrap(t.anchor);
    for (int dy = 0; dy < t.side; ++dy)
        for (int dx = 0; dx < t.side; ++dx) {
            CellRef& r = grid_[idx(t.anchor + Cell{dx, dy})];
            assert(r.side == 0);
            r = CellRef{static_cast<int8_t>(dx), static_cast<int8_t>(dy),
                        static_cast<int16_t>(t.side)};
        }
    (t.side == m_ ? n_m_ : n_s_)++;
    potential_ += tile_potential(t);
    hash_ ^= tile_hash(t);
}

void Tiling::remove(Tile t) {
    t.anchor = region_->wrap(t.anchor);
    for (int dy = 0; dy < t.side; ++dy)
        for (int dx = 0; dx < t.side; ++dx) grid_[idx(t.anchor + Cell{dx, dy})] = CellRef{};
    (t.side == m_ ? n_m_ : n_s_)--;
    potential_ -= tile_potential(t);
    hash_ ^= tile_hash(t);
}

Tile Tiling::tile_at(Cell c) const {
    c = region_->wrap(c);
    const CellRef& r = grid_[idx(c)];
    if (r.side == 0) throw std::logic_error("tile_at outside region");
    return Tile{region_->wrap(Cell{c.x - r.dx, c.y - r.dy}), r.side};
}

bool Tiling::has_anchor(Cell a, int side) const {
    if (!region_->contains(region_->wrap(a))) return false;
    const CellRef& r = grid_[idx(a)];
    return r.side == side && r.dx == 0 && r.dy == 0;
}

bool Tiling::block_in_region(Cell origin, int w, int h) const {
    if (region_->is_torus()) return w <= region_->torus_n() && h <= region_->torus_n();
    for (int dy = 0; dy < h; ++dy)
        for (int dx = 0; dx < w; ++dx)
            if (!region_->contains(origin + Cell{dx, dy})) return false;
    return true;
}

bool Tiling::is_unit_free(Cell origin, int w, int h) const {
    for (int dy = 0; dy < h; ++dy)
        for (int dx = 0; dx < w; ++dx) {
            Cell c = region_->wrap(origin + Cell{dx, dy});
            if (!region_->contains(c)) return false;
            const CellRef& r = grid_[idx(c)];
            if (r.side != 1) return false;
        }
    return true;
}

Tiling Tiling::all_small(RegionPtr region, int m, int s) {
    Tiling t(std::move(region), m, s);
    const Region& reg = t.region();
    if (m == 1) {
        for (Cell c : reg.cells()) t.place({c, 1});
        return t;
    }
    if (reg.is_torus()) {
        if (reg.torus_n() % m != 0)
            throw std::invalid_argument("torus side not divisible by m");
        for (int y = 0; y < reg.torus_n(); y += m)
            for (int x = 0; x < reg.torus_n(); x += m) t.place({{x, y}, m});
        return t;
    }
    for (Cell c : reg.cells()) {
        if (t.grid_[t.idx(c)].side != 0) continue;
        bool fits = true;
        for (int dy = 0; dy < m && fits; ++dy)
            for (int dx = 0; dx < m && fits; ++dx) {
                Cell cc = c + Cell{dx, dy};
                if (!reg.contains(cc) || t.grid_[t.idx(cc)].side != 0) fits = false;
            }
        if (!fits) throw std::invalid_argument("region not exactly tileable by m-squares");
        t.place({c, m});
    }
    return t;
}

Tiling Tiling::greedy_big(RegionPtr region, int m, int s) {
    if (m != 1)
        throw std::invalid_argument(
            "greedy_big is defined for m = 1; supply an explicit extreme tiling otherwise");
    Tiling t(std::move(region), m, s);
    const Region& reg = t.region();
    for (Cell c : reg.cells()) {
        if (t.grid_[t.idx(c)].side != 0) continue;
        bool fits = true;
        for (int dy = 0; dy < s && fits; ++dy)
            for (int dx = 0; dx < s && fits; ++dx) {
                Cell cc = reg.wrap(c + Cell{dx, dy});
                if (!reg.contains(cc) || t.grid_[t.idx(cc)].side != 0) fits = false;
            }
        if (fits)
            t.place({c, s});
        else
            t.place({c, 1});
    }
    return t;
}

Tiling Tiling::from_tiles(RegionPtr region, int m, int s, const std::vector<Tile>& tiles) {
    Tiling t(std::move(region), m, s);
    for (const Tile& tile : tiles) {
        if (tile.side != m && tile.side != s)
            throw std::invalid_argument("tile side is neither m nor s");
        for (int dy = 0; dy < tile.side; ++dy)
            for (int dx = 0; dx < tile.side; ++dx) {
                Cell c = t.region_->wrap(tile.anchor + Cell{dx, dy});
                if (!t.region_->contains(c))
                    throw std::invalid_argument("tile sticks out of the region");
                if (t.grid_[t.idx(c)].side != 0)
                    throw std::invalid_argument("tiles overlap");
            }
        t.place(tile);
    }
    if (t.n_m_ * m * m + t.n_s_ * s * s != t.region_->area())
        throw std::invalid_argument("tiles do not cover the region");
    return t;
}

std::vector<Tile> Tiling::tiles() const {
    std::vector<Tile> out;
    const Region& reg = *region_;
    for (int y = 0; y < reg.bbox_h(); ++y)
        for (int x = 0; x < reg.bbox_w(); ++x) {
            const CellRef& r = grid_[static_cast<size_t>(y) * reg.bbox_w() + x];
            if (r.side != 0 && r.dx == 0 && r.dy == 0)
                out.push_back({{reg.origin_x() + x, reg.origin_y() + y}, r.side});
        }
    std::sort(out.begin(), out.end(), [](Tile a, Tile b) {
        if (a.anchor != b.anchor) return a.anchor < b.anchor;
        return a.side < b.side;
    });
    return out;
}

std::vector<int32_t> Tiling::key() const {
    std::vector<int32_t> k;
    auto ts = tiles();
    k.reserve(ts.size() * 3);
    for (const Tile& t : ts) {
        k.push_back(t.anchor.x);
        k.push_back(t.anchor.y);
        k.push_back(t.side);
    }
    return k;
}

bool Tiling::valid_partition() const {
    const Region& reg = *region_;
    long long covered = 0;
    for (int y = 0; y < reg.bbox_h(); ++y)
        for (int x = 0; x < reg.bbox_w(); ++x) {
            Cell c{reg.origin_x() + x, reg.origin_y() + y};
            const CellRef& r = grid_[static_cast<size_t>(y) * reg.bbox_w() + x];
            if (!reg.contains(c)) {
                if (r.side != 0) return false;
                continue;
            }
            if (r.side != 1 && r.side != m_ && r.side != s_) return false;
            if (r.side == 1 && m_ != 1) return false;
            if (r.dx < 0 || r.dx >= r.side || r.dy < 0 || r.dy >= r.side) return false;
            Cell a = reg.wrap(Cell{c.x - r.dx, c.y - r.dy});
            const CellRef& ar = grid_[idx(a)];
            if (ar.side != r.side || ar.dx != 0 || ar.dy != 0) return false;
            ++covered;
        }
    return covered == reg.area();
}

std::pair<int, int> Tiling::block_dims_of(FlipKind kind) const {
    BlockDims d = block_dimensions(m_, s_);
    switch (kind) {
        case FlipKind::horizontal: return {d.hw, d.hh};
        case FlipKind::vertical: return {d.vw, d.vh};
        case FlipKind::central: return {d.p, d.p};
        default: throw std::logic_error("drag has no block dims");
    }
}

std::vector<Tile> Tiling::config_tiles(FlipKind kind, Cell o, int config, int m, int s) {
    const int L = std::lcm(m, s);
    std::vector<Tile> out;
    auto strip = [&](Cell at, int side, bool horiz) {
        for (int i = 0; i < L / side; ++i)
            out.push_back({horiz ? at + Cell{i * side, 0} : at + Cell{0, i * side}, side});
    };
    switch (kind) {
        case FlipKind::central:
            if (config == 0)
                for (int j = 0; j < L / m; ++j) strip(o + Cell{0, j * m}, m, true);
            else
                for (int j = 0; j < L / s; ++j) strip(o + Cell{0, j * s}, s, true);
            break;
        case FlipKind::horizontal:
            if (m == 1) {
                // s x (s+1) block: the big square sits at the bottom or the
                // top, the leftover row is units.
                Cell big = config == 0 ? o : o + Cell{0, 1};
                Cell row = config == 0 ? o + Cell{0, s} : o;
                out.push_back({big, s});
                for (int i = 0; i < s; ++i) out.push_back({row + Cell{i, 0}, 1});
            } else if (config == 0) {
                strip(o, m, true);
                strip(o + Cell{0, m}, s, true);
            } else {
                strip(o, s, true);
                strip(o + Cell{0, s}, m, true);
            }
            break;
        case FlipKind::vertical:
            if (m == 1) {
                Cell big = config == 0 ? o : o + Cell{1, 0};
                Cell col = config == 0 ? o + Cell{s, 0} : o;
                out.push_back({big, s});
                for (int i = 0; i < s; ++i) out.push_back({col + Cell{0, i}, 1});
            } else if (config == 0) {
                strip(o, m, false);
                strip(o + Cell{m, 0}, s, false);
            } else {
                strip(o, s, false);
                strip(o + Cell{s, 0}, m, false);
            }
            break;
        default:
            throw std::logic_error("drag has no block configs");
    }
    return out;
}

int Tiling::read_block_config(FlipKind kind, Cell origin) const {
    for (int config = 0; config < 2; ++config) {
        bool match = true;
        for (const Tile& t : config_tiles(kind, origin, config, m_, s_))
            if (!has_anchor(region_->wrap(t.anchor), t.side)) {
                match = false;
                break;
            }
        if (match) return config;
    }
    return -1;
}

void Tiling::write_block_config(FlipKind kind, Cell origin, int config) {
    int cur = read_block_config(kind, origin);
    assert(cur >= 0 && cur != config);
    for (const Tile& t : config_tiles(kind, origin, cur, m_, s_)) remove(t);
    for (const Tile& t : config_tiles(kind, origin, config, m_, s_)) place(t);
}

void Tiling::move_big(Cell from_anchor, Cell to_anchor) {
    assert(has_anchor(region_->wrap(from_anchor), s_));
    remove({region_->wrap(from_anchor), s_});
    // Cells entered by the move must currently be units; cells vacated
    // become units.
    for (int dy = 0; dy < s_; ++dy)
        for (int dx = 0; dx < s_; ++dx) {
            Cell c = region_->wrap(to_anchor + Cell{dx, dy});
            if (grid_[idx(c)].side == 1) remove({c, 1});
        }
    place({region_->wrap(to_anchor), s_});
    for (int dy = 0; dy < s_; ++dy)
        for (int dx = 0; dx < s_; ++dx) {
            Cell c = region_->wrap(from_anchor + Cell{dx, dy});
            if (grid_[idx(c)].side == 0) place({c, 1});
        }
}

}  // namespace tileflip
