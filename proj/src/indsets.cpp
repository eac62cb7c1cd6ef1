#include "tileflip/indsets.hpp"

#include <bit>
#include <stdexcept>

namespace tileflip {

namespace {
int mod_pos(int v, int n) {
    v %= n;
    return v < 0 ? v + n : v;
}
}  // namespace

KingGraph::KingGraph(int n_) : n(n_) {
    if (n < 2 || n > 8) throw std::invalid_argument("king graph supports 2 <= n <= 8");
    nbr_.assign(static_cast<size_t>(n) * n, 0);
    for (int y = 0; y < n; ++y)
        for (int x = 0; x < n; ++x) {
            uint64_t mask = 0;
            for (int dy = -1; dy <= 1; ++dy)
                for (int dx = -1; dx <= 1; ++dx) {
                    if (dx == 0 && dy == 0) continue;
                    int u = mod_pos(y + dy, n) * n + mod_pos(x + dx, n);
                    mask |= 1ull << u;
                }
            nbr_[static_cast<size_t>(y) * n + x] = mask;
        }
}

bool is_independent(const KingGraph& g, IndSet x) {
    for (int v = 0; v < g.vertices(); ++v)
        if ((x >> v) & 1)
            if (x & g.neighbor_mask(v)) return false;
    return true;
}

void enumerate_independent_sets(const KingGraph& g, const std::function<void(IndSet)>& fn) {
    if (g.n > 6) throw std::invalid_argument("exhaustive enumeration is limited to n <= 6");
    const int V = g.vertices();
    // DFS over vertices in index order with a blocked mask.
    std::function<void(int, IndSet, uint64_t)> rec = [&](int v, IndSet cur, uint64_t blocked) {
        if (v == V) {
            fn(cur);
            return;
        }
        rec(v + 1, cur, blocked);
        if (!((blocked >> v) & 1))
            rec(v + 1, cur | (1ull << v), blocked | g.neighbor_mask(v));
    };
    rec(0, 0, 0);
}

std::vector<long long> independent_set_counts(const KingGraph& g) {
    std::vector<long long> counts;
    enumerate_independent_sets(g, [&](IndSet x) {
        size_t k = static_cast<size_t>(std::popcount(x));
        if (counts.size() <= k) counts.resize(k + 1, 0);
        ++counts[k];
    });
    return counts;
}

Rat partition_function(const KingGraph& g, Rat lambda) {
    Rat z(0);
    auto counts = independent_set_counts(g);
    for (size_t k = 0; k < counts.size(); ++k)
        z += Rat(counts[k]) * Rat::pow(lambda, static_cast<int>(k));
    return z;
}

IndSet mc_drag_step(const KingGraph& g, IndSet x, double lambda, const StepDraws& d) {
    const int V = g.vertices();
    const int v = static_cast<int>(bounded_index(d.site_raw, static_cast<uint32_t>(V)));
    const double thr_unit = 1.0 / (lambda + 1.0);
    const double thr_drag = lambda / (4.0 * (lambda + 1.0));
    const uint64_t bit = 1ull << v;
    if (x & bit) {
        if (d.unit < thr_unit) return x & ~bit;  // delete
        return x;
    }
    uint64_t occ_nbrs = x & g.neighbor_mask(v);
    int cnt = std::popcount(occ_nbrs);
    if (cnt == 0) {
        if (d.unit >= thr_unit) return x | bit;  // insert
        return x;
    }
    if (cnt == 1) {
        if (d.unit < thr_drag) return (x | bit) & ~occ_nbrs;  // drag
        return x;
    }
    return x;
}

std::vector<std::pair<IndSet, Rat>> mc_drag_row(const KingGraph& g, IndSet x, Rat lambda) {
    std::vector<std::pair<IndSet, Rat>> row;
    auto add = [&](IndSet y, Rat p) {
        for (auto& [s, q] : row)
            if (s == y) {
                q += p;
                return;
            }
        row.push_back({y, p});
    };
    const Rat inv_n(1, g.vertices());
    const Rat pu = Rat(1) / (lambda + Rat(1));
    const Rat pb = lambda / (lambda + Rat(1));
    const Rat pd = lambda / (Rat(4) * (lambda + Rat(1)));
    for (int v = 0; v < g.vertices(); ++v) {
        const uint64_t bit = 1ull << v;
        if (x & bit) {
            add(x & ~bit, inv_n * pu);
            add(x, inv_n * pb);
        } else {
            uint64_t occ = x & g.neighbor_mask(v);
            int cnt = std::popcount(occ);
            if (cnt == 0) {
                add(x | bit, inv_n * pb);
                add(x, inv_n * pu);
            } else if (cnt == 1) {
                add((x | bit) & ~occ, inv_n * pd);
                add(x, inv_n * (Rat(1) - pd));
            } else {
                add(x, inv_n);
            }
        }
    }
    return row;
}

IndSet tiling_to_indset(const Tiling& t) {
    if (t.m() != 1 || t.s() != 2 || !t.region().is_torus())
        throw std::invalid_argument("bijection needs a (1,2) tiling of a torus");
    const int n = t.region().torus_n();
    IndSet x = 0;
    for (const Tile& tile : t.tiles())
        if (tile.side == 2) {
            Cell c = t.region().wrap(tile.anchor + Cell{1, 1});
            x |= 1ull << (c.y * n + c.x);
        }
    return x;
}

Tiling indset_to_tiling(IndSet x, const RegionPtr& torus_region) {
    if (!torus_region->is_torus()) throw std::invalid_argument("bijection needs a torus");
    const int n = torus_region->torus_n();
    Tiling t = Tiling::all_small(torus_region, 1, 2);
    for (int v = 0; v < n * n; ++v)
        if ((x >> v) & 1) {
            Cell center{v % n, v / n};
            Cell anchor = torus_region->wrap(center - Cell{1, 1});
            t.write_block_config(FlipKind::central, anchor, 1);
        }
    return t;
}

}  // namespace tileflip
