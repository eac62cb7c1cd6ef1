#include <cassert>
#include <stdexcept>

#include "tileflip/height.hpp"
#include "tileflip/tiling.hpp"

namespace tileflip {

// Every flip is addressed by one inner vertex: the vertex one step down-left
// of the block's upper-right corner (for slides and drags, of the moved
// square's upper-right corner after the move). This keeps every geometrically
// possible flip reachable from the chain's inner-vertex draws.

namespace {

long long config_potential(FlipKind kind, Cell origin, int config, int m, int s) {
    long long pot = 0;
    for (const Tile& t : Tiling::config_tiles(kind, origin, config, m, s))
        pot += t.side == m ? 2LL * t.anchor.y + m : 2LL * t.anchor.x + s;
    return pot;
}

// Candidate flips for m = 1 at a given site and direction, in probe order:
// central, then vertical slide of the big square (x motion), then the
// slide along y hosted by the "horizontal" block. At most one candidate can
// match because their footprints pairwise overlap.
std::optional<Flip> find_flip_unit(const Tiling& t, Vertex site, FlipDir dir) {
    const int s = t.s();
    const Region& reg = t.region();
    const Cell urc{site.x + 1, site.y + 1};
    const Cell target{urc.x - s, urc.y - s};  // anchor with its URC at `urc`

    // Central: split the big square anchored at `target`, or merge an all
    // units block there.
    if (t.block_in_region(target, s, s)) {
        int c = t.read_block_config(FlipKind::central, target);
        if (c == 1 && dir == FlipDir::down) return Flip{FlipKind::central, target, dir};
        if (c == 0 && dir == FlipDir::up) return Flip{FlipKind::central, target, dir};
    }

    // Slides: "up" moves the big square toward larger coordinates so that
    // its upper-right corner lands on urc.
    if (dir == FlipDir::up) {
        Cell o = target - Cell{0, 1};  // source below, moving +y
        if (t.block_in_region(o, s, s + 1) && t.read_block_config(FlipKind::horizontal, o) == 0)
            return Flip{FlipKind::horizontal, o, dir};
        o = target - Cell{1, 0};  // source left, moving +x
        if (t.block_in_region(o, s + 1, s) && t.read_block_config(FlipKind::vertical, o) == 0)
            return Flip{FlipKind::vertical, o, dir};
    } else {
        Cell o = target;  // source above, moving -y
        if (t.block_in_region(o, s, s + 1) && t.read_block_config(FlipKind::horizontal, o) == 1)
            return Flip{FlipKind::horizontal, o, dir};
        if (t.block_in_region(o, s + 1, s) && t.read_block_config(FlipKind::vertical, o) == 1)
            return Flip{FlipKind::vertical, o, dir};
    }
    (void)reg;
    return std::nullopt;
}

}  // namespace

FlipDelta flip_delta(const Tiling& t, FlipKind kind, Cell origin, const HeightField* field) {
    FlipDelta d{};
    const int m = t.m(), s = t.s();
    int cur = t.read_block_config(kind, origin);
    if (cur < 0) throw std::logic_error("flip_delta on a non-matching block");
    int other = 1 - cur;
    d.dpot = config_potential(kind, origin, other, m, s) -
             config_potential(kind, origin, cur, m, s);
    if (m > 1) {
        if (field == nullptr) throw std::logic_error("flip_delta for m > 1 needs a height field");
        long long gap = block_height_gap(kind, field->word({origin.x, origin.y}), m, s);
        d.dh = other == 1 ? gap : -gap;
    }
    return d;
}

std::optional<Flip> find_flip(const Tiling& t, Vertex site, FlipDir dir, const HeightField* field) {
    if (t.m() == 1) return find_flip_unit(t, site, dir);

    const Cell urc{site.x + 1, site.y + 1};
    for (FlipKind kind : {FlipKind::horizontal, FlipKind::vertical, FlipKind::central}) {
        auto [w, h] = t.block_dims_of(kind);
        Cell origin{urc.x - w, urc.y - h};
        if (!t.block_in_region(origin, w, h)) continue;
        if (t.read_block_config(kind, origin) < 0) continue;
        FlipDelta d = flip_delta(t, kind, origin, field);
        FlipDir toggles = d.is_up() ? FlipDir::up : FlipDir::down;
        if (toggles == dir) return Flip{kind, origin, dir};
        return std::nullopt;  // the block flips only in the other direction
    }
    return std::nullopt;
}

std::optional<Flip> find_flip(const Tiling& t, Vertex site, FlipDir dir) {
    if (t.m() == 1) return find_flip_unit(t, site, dir);
    HeightField field = vertex_heights(t);
    return find_flip(t, site, dir, &field);
}

std::vector<Flip> enumerate_flips(const Tiling& t) {
    std::vector<Flip> out;
    std::optional<HeightField> field;
    if (t.m() > 1) field.emplace(t, t.region().base_vertex(), 0);
    for (Vertex v : t.region().inner_vertices())
        for (FlipDir dir : {FlipDir::down, FlipDir::up}) {
            auto f = find_flip(t, v, dir, field ? &*field : nullptr);
            if (!f) continue;
            bool dup = false;
            for (const Flip& g : out)
                if (g == *f) {
                    dup = true;
                    break;
                }
            if (!dup) out.push_back(*f);
        }
    return out;
}

void apply_flip_inplace(Tiling& t, const Flip& f) {
    if (f.kind == FlipKind::drag) {
        if (t.m() != 1 || t.s() != 2)
            throw std::logic_error("drag flips exist only for (1,2) tilings");
        int sx = f.drag_axis == 0 ? 1 : 1, sy = f.drag_axis == 0 ? 1 : -1;
        if (f.dir == FlipDir::down) {
            sx = -sx;
            sy = -sy;
        }
        t.move_big(f.block_origin, f.block_origin + Cell{sx, sy});
        return;
    }
    int cur = t.read_block_config(f.kind, f.block_origin);
    if (cur < 0) throw std::logic_error("apply_flip: block does not match a configuration");
    t.write_block_config(f.kind, f.block_origin, 1 - cur);
}

Tiling apply_flip(const Tiling& t, const Flip& f) {
    Tiling out = t;
    apply_flip_inplace(out, f);
    return out;
}

Tiling minimal_descent(const Tiling& start) {
    if (start.region().is_torus())
        throw std::invalid_argument("minimal descent is defined on flat regions");
    Tiling cur = start;
    for (;;) {
        std::optional<HeightField> field;
        if (cur.m() > 1) field.emplace(cur, cur.region().base_vertex(), 0);
        // Choose the lexicographically smallest (block_origin, kind) among
        // flips that strictly decrease (descent height, potential).
        std::optional<Flip> best;
        for (const Flip& f : enumerate_flips(cur)) {
            if (f.kind == FlipKind::drag) continue;
            FlipDelta d = flip_delta(cur, f.kind, f.block_origin, field ? &*field : nullptr);
            long long dh = d.dh;
            if (cur.m() == 1) {
                // Degenerate heights: big-square count stands in.
                int c = cur.read_block_config(f.kind, f.block_origin);
                dh = 0;
                if (f.kind == FlipKind::central) dh = c == 0 ? 1 : -1;
            }
            bool decreases = dh < 0 || (dh == 0 && d.dpot < 0);
            if (!decreases) continue;
            if (!best) {
                best = f;
                continue;
            }
            auto keyf = [](const Flip& x) {
                return std::make_tuple(x.block_origin.x, x.block_origin.y,
                                       static_cast<int>(x.kind));
            };
            if (keyf(f) < keyf(*best)) best = f;
        }
        if (!best) return cur;
        apply_flip_inplace(cur, *best);
    }
}

}  // namespace tileflip
