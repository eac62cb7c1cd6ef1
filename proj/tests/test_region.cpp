#include <doctest.h>

#include "tileflip/region.hpp"
#include "tileflip/serialize.hpp"

using namespace tileflip;

TEST_CASE("smallest rectangle") {
    Region r = Region::rectangle(1, 1);
    CHECK(r.area() == 1);
    CHECK(r.inner_vertices().empty());
    CHECK(r.base_vertex() == Vertex{0, 0});
}

TEST_CASE("10x10 rectangle has 100 cells and 81 inner vertices") {
    Region r = Region::rectangle(10, 10);
    CHECK(r.area() == 100);
    CHECK(r.inner_vertices().size() == 81);
}

TEST_CASE("inner vertex count is (w-1)(h-1) for all rectangles up to 64") {
    for (int w = 1; w <= 64; ++w)
        for (int h = 1; h <= 64; ++h) {
            Region r = Region::rectangle(w, h);
            CHECK(static_cast<long long>(r.inner_vertices().size()) ==
                  static_cast<long long>(w - 1) * (h - 1));
        }
}

TEST_CASE("torus geometry") {
    Region t4 = Region::torus(4);
    CHECK(t4.inner_vertices().size() == 16);
    Region t6 = Region::torus(6);
    CHECK(t6.area() == 36);
    CHECK(t6.wrap({-1, 7}) == Cell{5, 1});
}

TEST_CASE("staircase hexagon construction") {
    Region r = Region::staircase_hexagon(50, 2, 3);
    // Bands of height 2m shrink by 2s per side away from the equator:
    // q = floor((50-1)/(4s)) = 4 stairs per half, area 2m((2q+1)W - 4sq(q+1)).
    const long long q = 4, W = 50, m = 2, s = 3;
    CHECK(r.area() == 2 * m * ((2 * q + 1) * W - 4 * s * q * (q + 1)));
    CHECK(r.area() == 840);  // frozen from the construction
    CHECK(r.bbox_w() == 50);
    CHECK(r.bbox_h() == 36);

    // 180-degree rotation symmetry of the cell set.
    for (Cell c : r.cells())
        CHECK(r.contains({r.bbox_w() - 1 - c.x, r.bbox_h() - 1 - c.y}));

    // Smaller instance, counted the same way.
    Region r2 = Region::staircase_hexagon(13, 2, 3);
    CHECK(r2.area() == 2 * 2 * (3 * 13 - 4 * 3 * 1 * 2));
}

TEST_CASE("staircase hexagon is 4-connected everywhere") {
    // Construction flood-fills and throws otherwise; reaching here with a
    // valid region plus a direct spot check is the property.
    Region r = Region::staircase_hexagon(26, 2, 3);
    CHECK(r.area() > 0);
    CHECK_NOTHROW(Region::staircase_hexagon(50, 2, 3));
}

TEST_CASE("invalid specs are rejected") {
    CHECK_THROWS_AS(Region::rectangle(0, 5), std::invalid_argument);
    CHECK_THROWS_AS(Region::rectangle(-1, 5), std::invalid_argument);
    CHECK_THROWS_AS(Region::torus(0), std::invalid_argument);
    CHECK_THROWS_AS(Region::staircase_hexagon(12, 2, 3), std::invalid_argument);
    CHECK_THROWS_AS(Region::staircase_hexagon(50, 3, 2), std::invalid_argument);
}

TEST_CASE("explicit regions must be simply connected") {
    // A 3x3 ring with the middle missing has a hole.
    std::vector<Cell> ring;
    for (int y = 0; y < 3; ++y)
        for (int x = 0; x < 3; ++x)
            if (!(x == 1 && y == 1)) ring.push_back({x, y});
    CHECK_THROWS_AS(Region::explicit_cells(ring), std::invalid_argument);

    // Two disconnected cells.
    CHECK_THROWS_AS(Region::explicit_cells({{0, 0}, {2, 0}}), std::invalid_argument);

    // An L-shape is fine.
    CHECK_NOTHROW(Region::explicit_cells({{0, 0}, {1, 0}, {0, 1}}));
}

TEST_CASE("region JSON round-trip is the identity") {
    std::vector<RegionPtr> regions;
    regions.push_back(std::make_shared<Region>(Region::rectangle(7, 3)));
    regions.push_back(std::make_shared<Region>(Region::torus(5)));
    regions.push_back(std::make_shared<Region>(Region::staircase_hexagon(26, 2, 3)));
    regions.push_back(std::make_shared<Region>(
        Region::explicit_cells({{2, 2}, {3, 2}, {2, 3}, {3, 3}, {4, 2}})));
    for (const auto& r : regions) {
        RegionPtr back = region_from_json(region_to_json(*r));
        CHECK(back->area() == r->area());
        CHECK(back->topology() == r->topology());
        CHECK(back->cells() == r->cells());
        CHECK(region_to_json(*back) == region_to_json(*r));
    }
}

TEST_CASE("spec strings parse") {
    CHECK(parse_region_spec("rect:10x10")->area() == 100);
    CHECK(parse_region_spec("torus:8")->area() == 64);
    CHECK(parse_region_spec("stairhex:50,2,3")->area() == 840);
    CHECK_THROWS(parse_region_spec("blob:3"));
}
