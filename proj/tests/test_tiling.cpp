#include <doctest.h>

#include <random>
#include <set>

#include "tileflip/chain.hpp"
#include "tileflip/height.hpp"
#include "tileflip/tiling.hpp"

using namespace tileflip;

namespace {
RegionPtr rect(int w, int h) { return std::make_shared<Region>(Region::rectangle(w, h)); }
RegionPtr torus(int n) { return std::make_shared<Region>(Region::torus(n)); }
}  // namespace

TEST_CASE("block dimensions") {
    BlockDims d = block_dimensions(2, 3);
    CHECK(d.hw == 6);
    CHECK(d.hh == 5);
    CHECK(d.vw == 5);
    CHECK(d.vh == 6);
    CHECK(d.p == 6);

    d = block_dimensions(1, 2);
    CHECK(d.hw == 2);
    CHECK(d.hh == 3);
    CHECK(d.vw == 3);
    CHECK(d.vh == 2);
    CHECK(d.p == 2);

    CHECK(block_dimensions(2, 4).p == 4);
}

TEST_CASE("all_small constructors") {
    CHECK(Tiling::all_small(rect(10, 10), 1, 2).tiles().size() == 100);
    Tiling t = Tiling::all_small(rect(10, 10), 2, 3);
    CHECK(t.tiles().size() == 25);
    for (const Tile& tile : t.tiles()) CHECK(tile.side == 2);
    CHECK_THROWS_AS(Tiling::all_small(rect(9, 9), 2, 3), std::invalid_argument);
}

TEST_CASE("greedy_big packings") {
    Tiling t44 = Tiling::greedy_big(rect(4, 4), 1, 2);
    CHECK(t44.big_count() == 4);
    CHECK(t44.unit_count() == 0);

    Tiling t55 = Tiling::greedy_big(rect(5, 5), 1, 2);
    CHECK(t55.big_count() == 4);
    CHECK(t55.unit_count() == 9);

    Tiling t33 = Tiling::greedy_big(rect(3, 3), 1, 3);
    CHECK(t33.big_count() == 1);
    CHECK(t33.unit_count() == 0);

    CHECK_THROWS_AS(Tiling::greedy_big(rect(4, 4), 2, 3), std::invalid_argument);
}

TEST_CASE("find_flip at the center of a 2x2 all-units square") {
    Tiling t = Tiling::all_small(rect(2, 2), 1, 2);
    auto f = find_flip(t, {1, 1}, FlipDir::up);
    REQUIRE(f.has_value());
    CHECK(f->kind == FlipKind::central);
    CHECK(f->block_origin == Cell{0, 0});
    Tiling u = apply_flip(t, *f);
    CHECK(u.big_count() == 1);
    CHECK(u.unit_count() == 0);
    // No flip in the other direction.
    CHECK(!find_flip(t, {1, 1}, FlipDir::down).has_value());
    // Down on the merged tiling splits back.
    auto g = find_flip(u, {1, 1}, FlipDir::down);
    REQUIRE(g.has_value());
    CHECK(apply_flip(u, *g) == t);
}

TEST_CASE("no flip is a normal outcome") {
    Tiling t = Tiling::all_small(rect(3, 3), 1, 2);
    // (1,1) up merges the lower-left block; down has nothing to split.
    CHECK(!find_flip(t, {1, 1}, FlipDir::down).has_value());
}

TEST_CASE("enumerate_flips counts") {
    CHECK(enumerate_flips(Tiling::all_small(rect(2, 2), 1, 2)).size() == 1);
    auto flips = enumerate_flips(Tiling::all_small(rect(10, 10), 1, 2));
    CHECK(flips.size() == 81);
    for (const Flip& f : flips) {
        CHECK(f.kind == FlipKind::central);
        CHECK(f.dir == FlipDir::up);
    }
}

TEST_CASE("slides move one cell and are involutive") {
    // 3x2 region, one big square at the left: it can slide right.
    RegionPtr r = rect(3, 2);
    Tiling t = Tiling::greedy_big(r, 1, 2);  // big at (0,0), units at x=2
    REQUIRE(t.big_count() == 1);
    auto f = find_flip(t, {2, 1}, FlipDir::up);  // URC of the moved square is (3,2)
    REQUIRE(f.has_value());
    CHECK(f->kind == FlipKind::vertical);
    Tiling u = apply_flip(t, *f);
    CHECK(u.has_anchor({1, 0}, 2));
    auto back = find_flip(u, {1, 1}, FlipDir::down);
    REQUIRE(back.has_value());
    CHECK(apply_flip(u, *back) == t);
}

TEST_CASE("every flip has exactly one reverse (site, direction) draw") {
    // This is what makes the uniform transition matrix symmetric: a flip
    // T -> S selected by one (site, dir) pair is undone by exactly one
    // (site, reverse dir) pair on S.
    RegionPtr r = rect(6, 6);
    ChainConfig cfg;
    cfg.kind = ChainKind::uniform;
    cfg.region = r;
    cfg.m = 1;
    cfg.s = 2;
    cfg.seed = 77;
    ChainState st(cfg, Tiling::all_small(r, 1, 2));
    for (int step = 0; step < 2000; ++step) st.step();
    const Tiling& t = st.tiling();
    for (Vertex v : r->inner_vertices())
        for (FlipDir dir : {FlipDir::down, FlipDir::up}) {
            auto f = find_flip(t, v, dir);
            if (!f) continue;
            Tiling u = apply_flip(t, *f);
            int reverse_draws = 0;
            for (Vertex w : r->inner_vertices())
                for (FlipDir rd : {FlipDir::down, FlipDir::up}) {
                    auto g = find_flip(u, w, rd);
                    if (g && apply_flip(u, *g) == t) {
                        ++reverse_draws;
                        CHECK(rd == reverse(dir));
                    }
                }
            CHECK(reverse_draws == 1);
        }
}

TEST_CASE("unit-count invariant mod s^2 under random flips") {
    for (int s : {2, 3}) {
        RegionPtr r = rect(8, 8);
        ChainConfig cfg;
        cfg.kind = ChainKind::uniform;
        cfg.region = r;
        cfg.m = 1;
        cfg.s = s;
        cfg.seed = 99;
        ChainState st(cfg, Tiling::all_small(r, 1, s));
        long long alpha = st.tiling().unit_count() % (s * s);
        for (int i = 0; i < 20000; ++i) {
            st.step();
            CHECK(st.tiling().unit_count() % (s * s) == alpha);
        }
        CHECK(st.tiling().valid_partition());
    }
}

TEST_CASE("(2,3) flips on the 8x8 square") {
    RegionPtr r = rect(8, 8);
    Tiling t = Tiling::all_small(r, 2, 3);
    auto flips = enumerate_flips(t);
    // The all-2s tiling admits exactly the four central 6x6 blocks.
    CHECK(flips.size() == 4);
    std::set<std::pair<int, int>> origins;
    for (const Flip& f : flips) {
        CHECK(f.kind == FlipKind::central);
        origins.insert({f.block_origin.x, f.block_origin.y});
    }
    CHECK(origins == std::set<std::pair<int, int>>{{0, 0}, {0, 2}, {2, 0}, {2, 2}});

    // Involution through the full value API.
    for (const Flip& f : flips) {
        Tiling u = apply_flip(t, f);
        CHECK(u.count_side(3) == 4);
        Flip back{f.kind, f.block_origin, reverse(f.dir), 0};
        CHECK(apply_flip(u, back) == t);
    }
}

TEST_CASE("at most one flip per (site, direction) for (2,3)") {
    RegionPtr r = rect(8, 8);
    Tiling t = Tiling::all_small(r, 2, 3);
    HeightField field = vertex_heights(t);
    for (Vertex v : r->inner_vertices())
        for (FlipDir dir : {FlipDir::down, FlipDir::up}) {
            // Count matching blocks by hand.
            int matches = 0;
            for (FlipKind kind : {FlipKind::horizontal, FlipKind::vertical, FlipKind::central}) {
                auto [w, h] = t.block_dims_of(kind);
                Cell origin{v.x + 1 - w, v.y + 1 - h};
                if (!t.block_in_region(origin, w, h)) continue;
                if (t.read_block_config(kind, origin) >= 0) ++matches;
            }
            CHECK(matches <= 1);
        }
}

TEST_CASE("minimal descent reaches all_small for (1,s)") {
    for (int s : {2, 3}) {
        RegionPtr r = rect(6, 6);
        ChainConfig cfg;
        cfg.kind = ChainKind::uniform;
        cfg.region = r;
        cfg.m = 1;
        cfg.s = s;
        cfg.seed = 3;
        ChainState st(cfg, Tiling::all_small(r, 1, s));
        for (int i = 0; i < 5000; ++i) st.step();
        Tiling down = minimal_descent(st.tiling());
        CHECK(down == Tiling::all_small(r, 1, s));
        // A fixpoint stays fixed.
        CHECK(minimal_descent(down) == down);
    }
}

TEST_CASE("drag flips move a big square diagonally and invert") {
    RegionPtr r = torus(4);
    Tiling t = Tiling::all_small(r, 1, 2);
    t.write_block_config(FlipKind::central, {1, 1}, 1);  // big at (1,1)
    Flip drag{FlipKind::drag, {1, 1}, FlipDir::up, 0};
    Tiling u = apply_flip(t, drag);
    CHECK(u.has_anchor({2, 2}, 2));
    Flip back{FlipKind::drag, {2, 2}, FlipDir::down, 0};
    CHECK(apply_flip(u, back) == t);
}

TEST_CASE("torus anchors wrap") {
    RegionPtr r = torus(4);
    Tiling t = Tiling::all_small(r, 1, 2);
    t.write_block_config(FlipKind::central, {3, 3}, 1);  // wraps around both edges
    CHECK(t.big_count() == 1);
    CHECK(t.tile_at({0, 0}).anchor == Cell{3, 3});
    CHECK(t.valid_partition());
}

TEST_CASE("from_tiles validates") {
    RegionPtr r = rect(2, 2);
    CHECK_THROWS_AS(Tiling::from_tiles(r, 1, 2, {{{0, 0}, 2}, {{0, 0}, 1}}),
                    std::invalid_argument);                                   // overlap
    CHECK_THROWS_AS(Tiling::from_tiles(r, 1, 2, {{{1, 1}, 2}}), std::invalid_argument);  // out
    CHECK_THROWS_AS(Tiling::from_tiles(r, 1, 2, {{{0, 0}, 1}}), std::invalid_argument);  // gap
    CHECK(Tiling::from_tiles(r, 1, 2, {{{0, 0}, 2}}).valid_partition());
}
