#include <doctest.h>

#include <cmath>

#include "tileflip/chain.hpp"
#include "tileflip/smallgraph.hpp"

using namespace tileflip;

namespace {
RegionPtr rect(int w, int h) { return std::make_shared<Region>(Region::rectangle(w, h)); }
RegionPtr torus(int n) { return std::make_shared<Region>(Region::torus(n)); }

ChainConfig uniform_cfg(RegionPtr r, int m, int s, uint64_t seed) {
    ChainConfig cfg;
    cfg.kind = ChainKind::uniform;
    cfg.region = std::move(r);
    cfg.m = m;
    cfg.s = s;
    cfg.seed = seed;
    return cfg;
}
}  // namespace

TEST_CASE("chain config validation") {
    ChainConfig cfg;
    cfg.kind = ChainKind::weighted_1_2;
    cfg.region = rect(4, 4);
    cfg.m = 1;
    cfg.s = 2;
    cfg.lambda = Rat(1, 3);
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);  // needs a torus
    cfg.region = torus(4);
    CHECK_NOTHROW(cfg.validate());
    cfg.s = 3;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);  // (1,2) only

    ChainConfig uni = uniform_cfg(torus(6), 2, 3, 0);
    CHECK_THROWS_AS(uni.validate(), std::invalid_argument);  // heights undefined on tori
    uni.region = rect(6, 6);
    CHECK_NOTHROW(uni.validate());
    uni.lambda = Rat(1, 2);
    CHECK_THROWS_AS(uni.validate(), std::invalid_argument);  // uniform means lambda 1

    ChainConfig w1s;
    w1s.kind = ChainKind::weighted_1_s;
    w1s.region = rect(4, 4);
    w1s.m = 2;
    w1s.s = 3;
    w1s.lambda = Rat(1, 7);
    CHECK_THROWS_AS(w1s.validate(), std::invalid_argument);  // m must be 1
}

TEST_CASE("the only move on a 2x2 all-units board is the merge") {
    auto r = rect(2, 2);
    ChainState st(uniform_cfg(r, 1, 2, 123), Tiling::all_small(r, 1, 2));
    uint64_t holds = 0;
    while (st.tiling().big_count() == 0) {
        st.step();
        ++holds;
        REQUIRE(holds < 100);
    }
    CHECK(st.tiling().big_count() == 1);
    CHECK(st.tiling().unit_count() == 0);
}

TEST_CASE("holding leaves the tiling unchanged but advances the counter") {
    auto r = rect(3, 3);
    // (1,3) on a 3x3: the only flips toggle the single full-board block.
    ChainState st(uniform_cfg(r, 1, 3, 9), Tiling::all_small(r, 1, 3));
    uint64_t before = st.step_count();
    Tiling t0 = st.tiling();
    st.step();
    CHECK(st.step_count() == before + 1);
    // Either held or merged the single 3x3 block.
    CHECK((st.tiling() == t0 || st.tiling().big_count() == 1));
}

TEST_CASE("trajectories are reproducible from (config, seed)") {
    for (int run = 0; run < 2; ++run) {
        auto r = rect(6, 6);
        ChainState a(uniform_cfg(r, 1, 2, 777), Tiling::all_small(r, 1, 2));
        ChainState b(uniform_cfg(r, 1, 2, 777), Tiling::all_small(r, 1, 2));
        for (int i = 0; i < 5000; ++i) {
            a.step();
            b.step();
        }
        CHECK(a.tiling() == b.tiling());
        ChainState c(uniform_cfg(r, 1, 2, 778), Tiling::all_small(r, 1, 2));
        for (int i = 0; i < 5000; ++i) c.step();
        CHECK(!(a.tiling() == c.tiling()));  // a different seed diverges
    }
}

TEST_CASE("weighted (2,3)-uniform chain on the staircase hexagon moves") {
    auto r = std::make_shared<Region>(Region::staircase_hexagon(26, 2, 3));
    ChainState st(uniform_cfg(r, 2, 3, 4), Tiling::all_small(r, 2, 3));
    for (int i = 0; i < 20000; ++i) st.step();
    CHECK(st.tiling().count_side(3) > 0);
    CHECK(st.tiling().valid_partition());
}

TEST_CASE("grand coupling of equal starts couples immediately") {
    auto r = rect(4, 4);
    Tiling t = Tiling::all_small(r, 1, 2);
    CouplingResult res = grand_coupling(uniform_cfg(r, 1, 2, 1), t, t, 100);
    CHECK(res.coupled);
    CHECK(res.steps == 0);
    CHECK(res.final == t);
}

TEST_CASE("coupled copies stay equal forever") {
    auto r = rect(5, 5);
    ChainConfig cfg = uniform_cfg(r, 1, 2, 31);
    CouplingResult res =
        grand_coupling(cfg, Tiling::greedy_big(r, 1, 2), Tiling::all_small(r, 1, 2), 1000000);
    REQUIRE(res.coupled);
    // Re-run both copies past the coupling time and watch them agree.
    ChainState a(cfg, Tiling::greedy_big(r, 1, 2));
    ChainState b(cfg, Tiling::all_small(r, 1, 2));
    for (uint64_t i = 0; i < res.steps; ++i) {
        a.step();
        b.step();
    }
    CHECK(a.tiling() == b.tiling());
    for (int i = 0; i < 2000; ++i) {
        a.step();
        b.step();
        CHECK(a.tiling().hash() == b.tiling().hash());
    }
}

TEST_CASE("coupling from far pair dominates a one-flip pair on rect(4,4)") {
    auto r = rect(4, 4);
    Tiling big = Tiling::greedy_big(r, 1, 2);
    Tiling small = Tiling::all_small(r, 1, 2);
    Tiling near = apply_flip(small, *find_flip(small, {1, 1}, FlipDir::up));
    double far_sum = 0, near_sum = 0;
    const int trials = 150;
    for (int t = 0; t < trials; ++t) {
        ChainConfig cfg = uniform_cfg(r, 1, 2, trial_seed(500, t));
        far_sum += static_cast<double>(grand_coupling(cfg, big, small, 10000000).steps);
        near_sum += static_cast<double>(grand_coupling(cfg, near, small, 10000000).steps);
    }
    CHECK(far_sum / trials > near_sum / trials);
}

TEST_CASE("weighted (1,2) chain matrix row from all-units") {
    // lambda = 1/3: a big square is placed with probability 1/4 at a drawn
    // site, matching the heat-bath thresholds.
    auto r = torus(4);
    auto ts = enumerate_tilings(r, 1, 2);
    ChainConfig cfg;
    cfg.kind = ChainKind::weighted_1_2;
    cfg.lambda = Rat(1, 3);
    cfg.region = r;
    cfg.m = 1;
    cfg.s = 2;
    TilingGraph g = build_flip_graph(ts, cfg);
    int units = -1;
    for (size_t i = 0; i < g.verts.size(); ++i)
        if (g.verts[i].big_count() == 0) units = static_cast<int>(i);
    REQUIRE(units >= 0);
    int singles = 0;
    for (const auto& [j, p] : g.rows[units]) {
        if (j == units) continue;
        CHECK(g.verts[j].big_count() == 1);
        CHECK(p == Rat(1, 16) * Rat(1, 4));
        ++singles;
    }
    CHECK(singles == 16);
}

TEST_CASE("weighted (1,s) chain absorbs at all_small as lambda goes to 0") {
    auto r = rect(4, 4);
    ChainConfig cfg;
    cfg.kind = ChainKind::weighted_1_s;
    cfg.lambda = Rat(1, 1000000);
    cfg.region = r;
    cfg.m = 1;
    cfg.s = 2;
    cfg.seed = 55;
    ChainState st(cfg, Tiling::greedy_big(r, 1, 2));
    for (int i = 0; i < 30000 && st.tiling().big_count() > 0; ++i) st.step();
    CHECK(st.tiling().big_count() == 0);
}

TEST_CASE("empirical transition frequencies match the exact matrix") {
    auto r = rect(8, 8);
    auto ts = enumerate_tilings(r, 2, 3);
    ChainConfig cfg = uniform_cfg(r, 2, 3, 2718);
    TilingGraph g = build_flip_graph(ts, cfg);
    ChainState st(cfg, Tiling::all_small(r, 2, 3));
    const long long N = 1000000;
    std::vector<long long> visits(g.verts.size(), 0);
    std::vector<std::unordered_map<int, long long>> trans(g.verts.size());
    int cur = g.find(st.tiling());
    for (long long i = 0; i < N; ++i) {
        ++visits[cur];
        st.step();
        int nxt = g.find(st.tiling());
        REQUIRE(nxt >= 0);
        if (nxt != cur) ++trans[cur][nxt];
        cur = nxt;
    }
    long long checked = 0, violations = 0;
    for (size_t i = 0; i < g.verts.size(); ++i)
        for (const auto& [j, p] : g.rows[i]) {
            if (static_cast<int>(i) == j) continue;
            double expect = static_cast<double>(visits[i]) * p.to_double();
            if (expect < 20) continue;
            double got = static_cast<double>(trans[i].count(j) ? trans[i][j] : 0);
            double sigma = std::sqrt(expect * (1.0 - p.to_double()));
            ++checked;
            if (std::fabs(got - expect) > 3.0 * sigma) ++violations;
        }
    CHECK(checked > 20);
    // ~0.3% of pairs may exceed 3 sigma by chance.
    CHECK(static_cast<double>(violations) <= 0.02 * static_cast<double>(checked) + 1.0);
}
