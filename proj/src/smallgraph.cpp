#include "tileflip/smallgraph.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <functional>
#include <stdexcept>

namespace tileflip {

std::string tiling_key_string(const Tiling& t) {
    auto k = t.key();
    return std::string(reinterpret_cast<const char*>(k.data()), k.size() * sizeof(int32_t));
}

std::vector<Tiling> enumerate_tilings(const RegionPtr& region, int m, int s, long long budget) {
    const Region& reg = *region;
    std::vector<Cell> cells = reg.cells();
    std::vector<uint8_t> covered(cells.size(), 0);
    std::unordered_map<long long, int> cell_pos;
    auto cid = [&](Cell c) {
        return (static_cast<long long>(c.y) << 24) ^ (c.x & 0xffffff);
    };
    for (size_t i = 0; i < cells.size(); ++i) cell_pos[cid(cells[i])] = static_cast<int>(i);

    std::vector<Tile> stack;
    std::vector<Tiling> out;

    auto covered_at = [&](Cell c) -> uint8_t& {
        auto it = cell_pos.find(cid(reg.wrap(c)));
        assert(it != cell_pos.end());
        return covered[it->second];
    };
    auto fits = [&](Cell anchor, int side) {
        for (int dy = 0; dy < side; ++dy)
            for (int dx = 0; dx < side; ++dx) {
                Cell c = reg.wrap(anchor + Cell{dx, dy});
                if (!reg.contains(c) || covered_at(c)) return false;
            }
        return true;
    };
    auto set_cover = [&](Cell anchor, int side, uint8_t v) {
        for (int dy = 0; dy < side; ++dy)
            for (int dx = 0; dx < side; ++dx) covered_at(anchor + Cell{dx, dy}) = v;
    };

    std::function<void(size_t)> rec = [&](size_t from) {
        size_t first = from;
        while (first < cells.size() && covered[first]) ++first;
        if (first == cells.size()) {
            if (static_cast<long long>(out.size()) >= budget)
                throw std::runtime_error("tiling enumeration exceeded budget");
            out.push_back(Tiling::from_tiles(region, m, s, stack));
            return;
        }
        const Cell c = cells[first];
        for (int side : {m, s}) {
            if (reg.is_torus()) {
                // A wrapped tile may cover the first uncovered cell from any
                // offset; each choice of covering tile is a disjoint branch.
                for (int dy = 0; dy < side; ++dy)
                    for (int dx = 0; dx < side; ++dx) {
                        Cell anchor = reg.wrap(c - Cell{dx, dy});
                        if (!fits(anchor, side)) continue;
                        set_cover(anchor, side, 1);
                        stack.push_back({anchor, side});
                        rec(first);
                        stack.pop_back();
                        set_cover(anchor, side, 0);
                    }
            } else {
                // Row-major first-uncovered: the covering tile is anchored here.
                if (!fits(c, side)) continue;
                set_cover(c, side, 1);
                stack.push_back({c, side});
                rec(first + 1);
                stack.pop_back();
                set_cover(c, side, 0);
            }
            if (m == s) break;
        }
    };
    rec(0);
    return out;
}

int TilingGraph::find(const Tiling& t) const {
    auto it = index.find(tiling_key_string(t));
    return it == index.end() ? -1 : it->second;
}

Rat TilingGraph::prob(int i, int j) const {
    for (const auto& [c, p] : rows[i])
        if (c == j) return p;
    return Rat(0);
}

bool TilingGraph::connected() const {
    if (verts.empty()) return false;
    std::vector<uint8_t> seen(verts.size(), 0);
    std::deque<int> q{0};
    seen[0] = 1;
    size_t n = 0;
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        ++n;
        for (int u : adj[v])
            if (!seen[u]) {
                seen[u] = 1;
                q.push_back(u);
            }
    }
    return n == verts.size();
}

namespace {

void add_prob(std::vector<std::pair<int, Rat>>& row, int j, Rat p) {
    for (auto& [c, q] : row)
        if (c == j) {
            q += p;
            return;
        }
    row.push_back({j, p});
}

// Transition row of the weighted (1,2) chain (torus): per site, heat-bath
// central resampling plus the drag move, mirroring ChainState's step rule
// with exact probabilities.
void weighted_12_row(const TilingGraph& g, int i, const Rat& lambda,
                     std::vector<std::pair<int, Rat>>& row) {
    const Tiling& t = g.verts[i];
    const Region& reg = t.region();
    if (reg.inner_vertices().empty()) {  // no sites: the chain holds forever
        row.push_back({i, Rat(1)});
        return;
    }
    const auto& sites = reg.inner_vertices();
    const Rat inv_n(1, static_cast<long long>(sites.size()));
    const Rat p_units = Rat(1) / (lambda + Rat(1));
    const Rat p_big = lambda / (lambda + Rat(1));
    const Rat p_drag = lambda / (Rat(4) * (lambda + Rat(1)));
    Rat stay(0);
    for (Vertex v : sites) {
        Cell o = reg.wrap(v - Cell{1, 1});
        if (t.has_anchor(o, 2)) {
            Tiling u = t;
            u.write_block_config(FlipKind::central, o, 0);
            add_prob(row, g.find(u), inv_n * p_units);
            stay += inv_n * p_big;
            continue;
        }
        int cnt = 0;
        Cell nb{};
        for (int dy = -1; dy <= 1; ++dy)
            for (int dx = -1; dx <= 1; ++dx) {
                if (dx == 0 && dy == 0) continue;
                Cell a = reg.wrap(o + Cell{dx, dy});
                if (t.has_anchor(a, 2)) {
                    ++cnt;
                    nb = a;
                }
            }
        if (cnt == 0) {
            Tiling u = t;
            u.write_block_config(FlipKind::central, o, 1);
            add_prob(row, g.find(u), inv_n * p_big);
            stay += inv_n * p_units;
        } else if (cnt == 1) {
            Tiling u = t;
            u.move_big(nb, o);
            add_prob(row, g.find(u), inv_n * p_drag);
            stay += inv_n * (Rat(1) - p_drag);
        } else {
            stay += inv_n;
        }
    }
    add_prob(row, i, stay);
}

void weighted_1s_row(const TilingGraph& g, int i, const Rat& lambda,
                     std::vector<std::pair<int, Rat>>& row) {
    const Tiling& t = g.verts[i];
    const Region& reg = t.region();
    if (reg.inner_vertices().empty()) {  // no sites: the chain holds forever
        row.push_back({i, Rat(1)});
        return;
    }
    const int s = t.s();
    const auto& sites = reg.inner_vertices();
    const Rat inv_n(1, static_cast<long long>(sites.size()));
    const Rat p_units = Rat(1) / (lambda + Rat(1));
    const Rat p_big = lambda / (lambda + Rat(1));
    Rat stay(0);
    for (Vertex v : sites) {
        Cell o = v - Cell{s - 1, s - 1};
        if (!t.block_in_region(o, s, s)) {
            stay += inv_n;
            continue;
        }
        int c = t.read_block_config(FlipKind::central, o);
        if (c == 1) {
            Tiling u = t;
            u.write_block_config(FlipKind::central, o, 0);
            add_prob(row, g.find(u), inv_n * p_units);
            stay += inv_n * p_big;
        } else if (c == 0) {
            Tiling u = t;
            u.write_block_config(FlipKind::central, o, 1);
            add_prob(row, g.find(u), inv_n * p_big);
            stay += inv_n * p_units;
        } else {
            stay += inv_n;
        }
    }
    add_prob(row, i, stay);
}

void uniform_row(const TilingGraph& g, int i, std::vector<std::pair<int, Rat>>& row) {
    const Tiling& t = g.verts[i];
    const auto& sites = t.region().inner_vertices();
    if (sites.empty()) {  // no sites: the chain holds forever
        row.push_back({i, Rat(1)});
        return;
    }
    const Rat step(1, 2 * static_cast<long long>(sites.size()));
    std::optional<HeightField> field;
    if (t.m() > 1) field.emplace(t, t.region().base_vertex(), 0);
    Rat stay(0);
    for (Vertex v : sites)
        for (FlipDir dir : {FlipDir::down, FlipDir::up}) {
            auto f = find_flip(t, v, dir, field ? &*field : nullptr);
            if (!f) {
                stay += step;
                continue;
            }
            Tiling u = apply_flip(t, *f);
            int j = g.find(u);
            assert(j >= 0);
            add_prob(row, j, step);
        }
    add_prob(row, i, stay);
}

}  // namespace

TilingGraph build_flip_graph(std::vector<Tiling> tilings, const ChainConfig& chain) {
    TilingGraph g;
    g.chain = chain;
    g.verts = std::move(tilings);
    for (size_t i = 0; i < g.verts.size(); ++i)
        g.index[tiling_key_string(g.verts[i])] = static_cast<int>(i);
    if (g.index.size() != g.verts.size())
        throw std::invalid_argument("duplicate tilings in enumeration");

    // Flip edges (uniform taxonomy).
    g.adj.assign(g.verts.size(), {});
    for (size_t i = 0; i < g.verts.size(); ++i)
        for (const Flip& f : enumerate_flips(g.verts[i])) {
            Tiling u = apply_flip(g.verts[i], f);
            int j = g.find(u);
            if (j < 0) throw std::logic_error("flip closure violated: flipped tiling unknown");
            if (j != static_cast<int>(i) &&
                std::find(g.adj[i].begin(), g.adj[i].end(), j) == g.adj[i].end()) {
                g.adj[i].push_back(j);
                g.adj[j].push_back(static_cast<int>(i));
            }
        }
    for (auto& a : g.adj) {
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
    }

    g.rows.assign(g.verts.size(), {});
    for (size_t i = 0; i < g.verts.size(); ++i) {
        switch (chain.kind) {
            case ChainKind::uniform: uniform_row(g, static_cast<int>(i), g.rows[i]); break;
            case ChainKind::weighted_1_2:
                weighted_12_row(g, static_cast<int>(i), chain.lambda, g.rows[i]);
                break;
            case ChainKind::weighted_1_s:
                weighted_1s_row(g, static_cast<int>(i), chain.lambda, g.rows[i]);
                break;
        }
        std::sort(g.rows[i].begin(), g.rows[i].end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        Rat sum(0);
        for (const auto& [c, p] : g.rows[i]) sum += p;
        if (sum != Rat(1)) throw std::logic_error("transition row does not sum to 1");
    }
    return g;
}

StationaryReport stationary_check(const TilingGraph& g) {
    StationaryReport rep;
    if (!g.connected()) throw std::invalid_argument("stationary check requires a connected graph");
    const size_t n = g.verts.size();

    std::vector<Rat> pi(n, Rat(1));
    if (g.chain.kind != ChainKind::uniform) {
        Rat z(0);
        for (size_t i = 0; i < n; ++i) {
            pi[i] = Rat::pow(g.chain.lambda, static_cast<int>(g.verts[i].big_count()));
            z += pi[i];
        }
        for (auto& p : pi) p = p / z;
    } else {
        for (auto& p : pi) p = Rat(1, static_cast<long long>(n));
    }

    std::vector<Rat> flow(n, Rat(0));
    for (size_t i = 0; i < n; ++i)
        for (const auto& [j, p] : g.rows[i]) flow[j] += pi[i] * p;

    Rat max_res(0);
    for (size_t j = 0; j < n; ++j) {
        Rat r = flow[j] - pi[j];
        if (r.num < 0) r = Rat(0) - r;
        if (r > max_res) max_res = r;
    }
    rep.max_residual = max_res.to_double();
    rep.ok = (max_res == Rat(0));

    rep.symmetric = true;
    rep.detailed_balance = true;
    for (size_t i = 0; i < n && (rep.symmetric || rep.detailed_balance); ++i)
        for (const auto& [j, p] : g.rows[i]) {
            Rat back = g.prob(static_cast<int>(j), static_cast<int>(i));
            if (p != back) rep.symmetric = false;
            if (pi[i] * p != pi[j] * back) rep.detailed_balance = false;
        }
    return rep;
}

GraphStats graph_stats(const TilingGraph& g) {
    GraphStats st;
    const size_t n = g.verts.size();
    for (size_t i = 0; i < n; ++i) {
        size_t deg = g.adj[i].size();
        if (st.degree_histogram.size() <= deg) st.degree_histogram.resize(deg + 1, 0);
        ++st.degree_histogram[deg];
        st.edges += deg;
    }
    st.edges /= 2;
    for (size_t src = 0; src < n; ++src) {
        std::vector<int> dist(n, -1);
        std::deque<int> q{static_cast<int>(src)};
        dist[src] = 0;
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            for (int u : g.adj[v])
                if (dist[u] < 0) {
                    dist[u] = dist[v] + 1;
                    q.push_back(u);
                }
        }
        for (size_t j = 0; j < n; ++j) {
            if (dist[j] < 0) throw std::invalid_argument("graph_stats requires a connected graph");
            st.diameter = std::max(st.diameter, dist[j]);
        }
    }
    return st;
}

long long hamming_cells(const Tiling& a, const Tiling& b) {
    long long d = 0;
    const Region& reg = a.region();
    for (Cell c : reg.cells()) {
        Tile ta = a.tile_at(c), tb = b.tile_at(c);
        if (!(ta == tb)) ++d;
    }
    return d;
}

CanonicalPath canonical_path(const Tiling& from, const Tiling& to) {
    CanonicalPath out;
    if (from.m() != 1 || from.s() != 2 || to.m() != 1 || to.s() != 2) {
        out.diagnostic = "canonical paths are defined for (1,2) tilings";
        return out;
    }
    if (from.region().is_torus()) {
        out.diagnostic = "canonical paths need a flat region";
        return out;
    }
    Tiling z = from;
    long long dist = hamming_cells(z, to);

    // Column-major order over inner vertices; at each vertex the sweep works
    // inside the surrounding 2x2 window of cells, performing at most one
    // distance-decreasing flip per window vertex (revisits stay inside the
    // current window). Every flip strictly decreases the cell-wise Hamming
    // distance, so the path length is at most the area.
    std::vector<Vertex> order = from.region().inner_vertices();
    std::sort(order.begin(), order.end(), [](Vertex a, Vertex b) {
        return a.x != b.x ? a.x < b.x : a.y < b.y;
    });
    const Region& reg = from.region();

    for (Vertex v : order) {
        std::vector<Vertex> window;
        for (int dx = -1; dx <= 1; ++dx)
            for (int dy = -1; dy <= 1; ++dy) {
                Vertex w{v.x + dx, v.y + dy};
                if (!reg.is_torus() && w.x > reg.origin_x() && w.y > reg.origin_y() &&
                    w.x < reg.origin_x() + reg.bbox_w() && w.y < reg.origin_y() + reg.bbox_h())
                    window.push_back(w);
            }
        std::sort(window.begin(), window.end(), [](Vertex a, Vertex b) {
            return a.x != b.x ? a.x < b.x : a.y < b.y;
        });
        std::vector<uint8_t> used(window.size(), 0);
        bool progress = true;
        while (progress && dist > 0) {
            progress = false;
            for (size_t i = 0; i < window.size(); ++i) {
                if (used[i]) continue;
                std::optional<Flip> best;
                long long best_dist = dist;
                for (FlipDir dir : {FlipDir::down, FlipDir::up}) {
                    auto f = find_flip(z, window[i], dir, nullptr);
                    if (!f) continue;
                    Tiling u = apply_flip(z, *f);
                    long long d = hamming_cells(u, to);
                    if (d < best_dist) {
                        best_dist = d;
                        best = f;
                    }
                }
                if (best) {
                    apply_flip_inplace(z, *best);
                    out.flips.push_back(*best);
                    dist = best_dist;
                    used[i] = 1;
                    progress = true;
                    break;  // rescan the window from its first vertex
                }
            }
        }
        if (dist == 0) break;
    }
    out.ok = (z == to);
    if (!out.ok) out.diagnostic = "sweep did not reach the target tiling";
    return out;
}

CongestionReport congestion_check(const TilingGraph& g) {
    CongestionReport rep;
    const size_t n = g.verts.size();
    std::unordered_map<long long, long long> edge_count;
    for (size_t x = 0; x < n; ++x)
        for (size_t y = 0; y < n; ++y) {
            if (x == y) continue;
            ++rep.pairs;
            CanonicalPath p = canonical_path(g.verts[x], g.verts[y]);
            if (!p.ok) {
                ++rep.failures;
                continue;
            }
            rep.max_path_len = std::max(rep.max_path_len,
                                        static_cast<long long>(p.flips.size()));
            Tiling z = g.verts[x];
            int cur = static_cast<int>(x);
            for (const Flip& f : p.flips) {
                apply_flip_inplace(z, f);
                int nxt = g.find(z);
                assert(nxt >= 0);
                long long key = static_cast<long long>(std::min(cur, nxt)) * 1'000'000 +
                                std::max(cur, nxt);
                ++edge_count[key];
                cur = nxt;
            }
        }
    for (const auto& [k, c] : edge_count)
        rep.max_paths_through_edge = std::max(rep.max_paths_through_edge, c);
    return rep;
}

}  // namespace tileflip
