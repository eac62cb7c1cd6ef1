#include <doctest.h>

#include <random>
#include <vector>

#include "tileflip/cayley.hpp"

using namespace tileflip;

namespace {

// Independent oracle: multiply out a step sequence in the free product by
// brute-force rewriting (merge adjacent same-generator factors mod order,
// drop trivial factors, repeat to a fixed point).
std::vector<Factor> naive_reduce(const std::vector<std::pair<Gen, int>>& steps, int m, int s) {
    std::vector<Factor> w;
    for (auto [g, dir] : steps) {
        int ord = g == GenA ? m : s;
        if (ord == 1) continue;
        w.push_back({static_cast<uint8_t>(g), static_cast<int16_t>(((dir % ord) + ord) % ord)});
    }
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<Factor> next;
        for (const Factor& f : w) {
            if (f.exp == 0) {
                changed = true;
                continue;
            }
            if (!next.empty() && next.back().gen == f.gen) {
                int ord = f.gen == GenA ? m : s;
                next.back().exp = static_cast<int16_t>((next.back().exp + f.exp) % ord);
                changed = true;
            } else {
                next.push_back(f);
            }
        }
        w = std::move(next);
    }
    return w;
}

GroupWord from_steps(const std::vector<std::pair<Gen, int>>& steps, int m, int s) {
    GroupWord w;
    for (auto [g, dir] : steps) w.mul(g, dir, m, s);
    return w;
}

}  // namespace

TEST_CASE("a^m reduces to the identity") {
    for (int m = 2; m <= 5; ++m) {
        GroupWord w;
        for (int i = 0; i < m; ++i) w.mul(GenA, 1, m, 7);
        CHECK(w.is_identity());
    }
    GroupWord empty;
    CHECK(empty.is_identity());
}

TEST_CASE("canonical reduction matches the brute-force oracle") {
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 2000; ++trial) {
        int m = 2 + static_cast<int>(rng() % 3);
        int s = m + 1 + static_cast<int>(rng() % 3);
        std::vector<std::pair<Gen, int>> steps;
        int len = static_cast<int>(rng() % 20);
        for (int i = 0; i < len; ++i)
            steps.push_back({rng() % 2 ? GenA : GenB, rng() % 2 ? 1 : -1});
        GroupWord w = from_steps(steps, m, s);
        auto oracle = naive_reduce(steps, m, s);
        CHECK(w.f == oracle);
    }
}

TEST_CASE("a b a^-1 for m=2, s=3 is a.b.a") {
    GroupWord w = from_steps({{GenA, 1}, {GenB, 1}, {GenA, -1}}, 2, 3);
    REQUIRE(w.f.size() == 3);
    CHECK(w.f[0] == Factor{GenA, 1});
    CHECK(w.f[1] == Factor{GenB, 1});
    CHECK(w.f[2] == Factor{GenA, 1});
}

TEST_CASE("reduction is idempotent") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 500; ++trial) {
        int m = 2 + static_cast<int>(rng() % 3);
        int s = m + 1 + static_cast<int>(rng() % 3);
        std::vector<std::pair<Gen, int>> steps;
        for (int i = 0; i < 16; ++i) steps.push_back({rng() % 2 ? GenA : GenB, rng() % 2 ? 1 : -1});
        GroupWord w = from_steps(steps, m, s);
        // Re-feeding the canonical factors must reproduce the word.
        GroupWord w2;
        for (const Factor& f : w.f)
            for (int i = 0; i < f.exp; ++i) w2.mul(static_cast<Gen>(f.gen), 1, m, s);
        CHECK(w == w2);
    }
}

TEST_CASE("identity has weight zero") {
    GroupWord e;
    CHECK(cayley_weight(e, 3, 4) == 0);
    CHECK(cayley_weight(e, 2, 3) == 0);
}

TEST_CASE("base s-cycle weights for m=3, s=4 are 0,0,0,-1") {
    for (int k = 1; k < 4; ++k) {
        GroupWord w;
        for (int i = 0; i < k; ++i) w.mul(GenB, 1, 3, 4);
        CHECK(cayley_weight(w, 3, 4) == (k == 3 ? -1 : 0));
    }
}

TEST_CASE("m-cycle attached at a non-descending vertex sits one level up") {
    // b is not descending in the base s-cycle, so all other vertices of its
    // m-cycle get weight w(b) + 1.
    for (int m : {2, 3, 4})
        for (int s : {5, 7}) {
            GroupWord b;
            b.mul(GenB, 1, m, s);
            long long wb = cayley_weight(b, m, s);
            for (int k = 1; k < m; ++k) {
                GroupWord w = b;
                for (int i = 0; i < k; ++i) w.mul(GenA, 1, m, s);
                CHECK(cayley_weight(w, m, s) == wb + 1);
            }
        }
}

TEST_CASE("degenerate m=1 weights are all zero") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        GroupWord w;
        for (int i = 0; i < 30; ++i) w.mul(rng() % 2 ? GenA : GenB, rng() % 2 ? 1 : -1, 1, 4);
        CHECK(cayley_weight(w, 1, 4) == 0);
    }
}

namespace {

// Enumerates all canonical words up to a given factor-length by DFS.
void all_words(int m, int s, int max_steps, std::vector<GroupWord>& out) {
    std::vector<GroupWord> frontier{GroupWord{}};
    out.push_back(GroupWord{});
    for (int depth = 0; depth < max_steps; ++depth) {
        std::vector<GroupWord> next;
        for (const GroupWord& w : frontier)
            for (Gen g : {GenA, GenB})
                for (int dir : {1, -1}) {
                    GroupWord u = w;
                    u.mul(g, dir, m, s);
                    bool seen = false;
                    for (const GroupWord& v : out)
                        if (v == u) {
                            seen = true;
                            break;
                        }
                    if (!seen) {
                        out.push_back(u);
                        next.push_back(u);
                    }
                }
        frontier = std::move(next);
        if (static_cast<int>(out.size()) > 4000) break;
    }
}

}  // namespace

TEST_CASE("every cycle contains exactly one descending vertex") {
    for (auto [m, s] : std::vector<std::pair<int, int>>{{2, 3}, {3, 4}}) {
        std::vector<GroupWord> words;
        all_words(m, s, 12, words);
        int checked = 0;
        for (const GroupWord& w : words) {
            if (w.f.size() > 6) continue;  // keep the quadratic scan cheap
            // a-cycle of w: w * a^k for k = 0..m-1.
            for (Gen g : {GenA, GenB}) {
                int ord = g == GenA ? m : s;
                int descending = 0;
                long long level = INT64_MIN;
                std::vector<long long> ws;
                for (int k = 0; k < ord; ++k) {
                    GroupWord u = w;
                    for (int i = 0; i < k; ++i) u.mul(g, 1, m, s);
                    ws.push_back(cayley_weight(u, m, s));
                    level = std::max(level, ws.back());
                }
                for (long long x : ws) {
                    CHECK((x == level || x == level - 1));
                    if (x == level - 1) ++descending;
                }
                CHECK(descending == 1);
                ++checked;
            }
        }
        CHECK(checked >= 100);
    }
}
