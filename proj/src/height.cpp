#include "tileflip/height.hpp"

#include <cassert>
#include <deque>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace tileflip {

namespace {
constexpr int kDX[4] = {1, 0, -1, 0};
constexpr int kDY[4] = {0, 1, 0, -1};
// Generator step for each lattice direction.
constexpr Gen kGen[4] = {GenA, GenB, GenA, GenB};
constexpr int kSign[4] = {1, 1, -1, -1};
}  // namespace

bool skeleton_edge(const Tiling& t, Vertex v, int dir) {
    const Region& reg = t.region();
    if (reg.is_torus()) throw std::logic_error("height fields are undefined on tori");
    Cell c1, c2;  // the two cells adjacent to the edge
    if (dir == 0 || dir == 2) {
        int x = dir == 0 ? v.x : v.x - 1;
        c1 = {x, v.y};
        c2 = {x, v.y - 1};
    } else {
        int y = dir == 1 ? v.y : v.y - 1;
        c1 = {v.x - 1, y};
        c2 = {v.x, y};
    }
    bool in1 = reg.contains(c1), in2 = reg.contains(c2);
    if (!in1 && !in2) return false;
    if (in1 != in2) return true;  // region border
    return !(t.tile_at(c1) == t.tile_at(c2));
}

size_t HeightField::vidx(Vertex v) const {
    int x = v.x - ox_, y = v.y - oy_;
    if (x < 0 || y < 0 || x >= vw_ || y >= vh_) throw std::logic_error("vertex out of range");
    return static_cast<size_t>(y) * vw_ + x;
}

bool HeightField::present(Vertex v) const {
    int x = v.x - ox_, y = v.y - oy_;
    if (x < 0 || y < 0 || x >= vw_ || y >= vh_) return false;
    return present_[static_cast<size_t>(y) * vw_ + x] != 0;
}

long long HeightField::height(Vertex v) const {
    if (!present(v)) throw std::logic_error("height queried off the skeleton");
    return weight_[vidx(v)];
}

const GroupWord& HeightField::word(Vertex v) const {
    if (!present(v)) throw std::logic_error("word queried off the skeleton");
    return words_[vidx(v)];
}

std::vector<Vertex> HeightField::vertices() const {
    std::vector<Vertex> out;
    for (int y = 0; y < vh_; ++y)
        for (int x = 0; x < vw_; ++x)
            if (present_[static_cast<size_t>(y) * vw_ + x]) out.push_back({ox_ + x, oy_ + y});
    return out;
}

HeightField::HeightField(const Tiling& t, Vertex base, long long base_height)
    : m_(t.m()), s_(t.s()), base_(base), base_height_(base_height) {
    const Region& reg = t.region();
    if (reg.is_torus()) throw std::logic_error("height fields are undefined on tori");
    ox_ = reg.origin_x();
    oy_ = reg.origin_y();
    vw_ = reg.bbox_w() + 1;
    vh_ = reg.bbox_h() + 1;
    present_.assign(static_cast<size_t>(vw_) * vh_, 0);
    weight_.assign(present_.size(), 0);
    words_.assign(present_.size(), GroupWord{});

    size_t bi = vidx(base);
    present_[bi] = 1;
    weight_[bi] = base_height;
    bfs_fill(t, {base}, {ox_, oy_}, {ox_ + vw_ - 1, oy_ + vh_ - 1}, false);
}

void HeightField::bfs_fill(const Tiling& t, const std::vector<Vertex>& seeds,
                           Cell lo, Cell hi, bool interior_only) {
    std::deque<Vertex> queue(seeds.begin(), seeds.end());
    while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop_front();
        const size_t vi = vidx(v);
        for (int d = 0; d < 4; ++d) {
            Vertex u{v.x + kDX[d], v.y + kDY[d]};
            if (u.x < lo.x || u.y < lo.y || u.x > hi.x || u.y > hi.y) continue;
            if (interior_only && (u.x == lo.x || u.y == lo.y || u.x == hi.x || u.y == hi.y))
                continue;
            if (!skeleton_edge(t, v, d)) continue;
            size_t ui = vidx(u);
            if (present_[ui]) continue;
            present_[ui] = 1;
            GroupWord w = words_[vi];
            w.mul(kGen[d], kSign[d], m_, s_);
            weight_[ui] = base_height_ + cayley_weight(w, m_, s_);
            words_[ui] = std::move(w);
            queue.push_back(u);
        }
    }
}

void HeightField::refresh_block(const Tiling& t, Cell origin, int w, int h) {
    // Clear strictly-interior vertices, then grow back from the block
    // boundary along the new configuration's skeleton.
    for (int y = origin.y + 1; y < origin.y + h; ++y)
        for (int x = origin.x + 1; x < origin.x + w; ++x) {
            size_t i = vidx({x, y});
            present_[i] = 0;
            words_[i].f.clear();
        }
    std::vector<Vertex> seeds;
    for (int x = origin.x; x <= origin.x + w; ++x) {
        seeds.push_back({x, origin.y});
        seeds.push_back({x, origin.y + h});
    }
    for (int y = origin.y; y <= origin.y + h; ++y) {
        seeds.push_back({origin.x, y});
        seeds.push_back({origin.x + w, y});
    }
    std::vector<Vertex> live;
    for (Vertex v : seeds)
        if (present(v)) live.push_back(v);
    bfs_fill(t, live, origin, {origin.x + w, origin.y + h}, true);
}

HeightField vertex_heights(const Tiling& t, Vertex base, long long base_height) {
    if (!t.valid_partition()) throw std::invalid_argument("invalid tiling (not a partition)");
    return HeightField(t, base, base_height);
}

HeightField vertex_heights(const Tiling& t) {
    return HeightField(t, t.region().base_vertex(), 0);
}

long long tile_height(const Tiling& t, const HeightField& field, Tile tile) {
    if (t.m() == 1 || t.s() == 1) return 0;
    long long best = 0;
    bool first = true;
    if (tile.side == t.m()) {
        // Max over a vertical side; both vertical sides carry equal heights.
        for (int r = 0; r <= tile.side; ++r) {
            long long h = field.height({tile.anchor.x, tile.anchor.y + r});
            if (first || h > best) best = h, first = false;
        }
    } else {
        for (int r = 0; r <= tile.side; ++r) {
            long long h = field.height({tile.anchor.x + r, tile.anchor.y});
            if (first || h > best) best = h, first = false;
        }
    }
    return best;
}

long long total_height(const Tiling& t, const HeightField& field) {
    if (t.m() == 1 || t.s() == 1) return 0;
    long long sum = 0;
    for (const Tile& tile : t.tiles())
        sum += static_cast<long long>(tile.side) * tile.side * tile_height(t, field, tile);
    return sum;
}

long long total_height(const Tiling& t) {
    if (t.m() == 1 || t.s() == 1) return 0;
    HeightField f = vertex_heights(t);
    return total_height(t, f);
}

long long descent_height(const Tiling& t) {
    return t.m() == 1 ? t.big_count() : total_height(t);
}

long long replay_path(const Tiling& t, std::span<const Vertex> path) {
    if (path.empty()) throw std::invalid_argument("empty path");
    GroupWord w;
    const int m = t.m(), s = t.s();
    for (size_t i = 0; i + 1 < path.size(); ++i) {
        Vertex a = path[i], b = path[i + 1];
        int dx = b.x - a.x, dy = b.y - a.y;
        int d;
        if (dx == 1 && dy == 0) d = 0;
        else if (dx == 0 && dy == 1) d = 1;
        else if (dx == -1 && dy == 0) d = 2;
        else if (dx == 0 && dy == -1) d = 3;
        else throw std::invalid_argument("path steps must be unit lattice moves");
        if (!skeleton_edge(t, a, d)) throw std::invalid_argument("path crosses a tile");
        w.mul(kGen[d], kSign[d], m, s);
    }
    return cayley_weight(w, m, s);
}

namespace {

// Height of one block configuration, with paths running from the block's
// lower-left corner along the configuration's own grid lines so every
// relative word stays on the skeleton.
long long config_height_from_word(FlipKind kind, int config, const GroupWord& corner,
                                  int m, int s) {
    const int L = std::lcm(m, s);
    auto extend = [&](std::initializer_list<std::pair<Gen, int>> steps, Gen tail, int r) {
        GroupWord w = corner;
        for (auto [g, count] : steps)
            for (int i = 0; i < count; ++i) w.mul(g, 1, m, s);
        for (int i = 0; i < r; ++i) w.mul(tail, 1, m, s);
        return cayley_weight(w, m, s);
    };
    auto m_tile_h = [&](std::initializer_list<std::pair<Gen, int>> prefix) {
        // Max weight along the tile's left side.
        long long best = 0;
        bool first = true;
        for (int r = 0; r <= m; ++r) {
            long long h = extend(prefix, GenB, r);
            if (first || h > best) best = h, first = false;
        }
        return best;
    };
    auto s_tile_h = [&](std::initializer_list<std::pair<Gen, int>> prefix) {
        // Max weight along the tile's bottom side.
        long long best = 0;
        bool first = true;
        for (int r = 0; r <= s; ++r) {
            long long h = extend(prefix, GenA, r);
            if (first || h > best) best = h, first = false;
        }
        return best;
    };

    long long sum = 0;
    switch (kind) {
        case FlipKind::central:
            if (config == 0) {
                for (int j = 0; j < L / m; ++j)
                    for (int i = 0; i < L / m; ++i)
                        sum += (long long)m * m * m_tile_h({{GenA, i * m}, {GenB, j * m}});
            } else {
                for (int k = 0; k < L / s; ++k)
                    for (int j = 0; j < L / s; ++j)
                        sum += (long long)s * s * s_tile_h({{GenB, k * s}, {GenA, j * s}});
            }
            break;
        case FlipKind::horizontal:
            if (config == 0) {
                for (int i = 0; i < L / m; ++i)
                    sum += (long long)m * m * m_tile_h({{GenA, i * m}});
                for (int j = 0; j < L / s; ++j)
                    sum += (long long)s * s * s_tile_h({{GenB, m}, {GenA, j * s}});
            } else {
                for (int j = 0; j < L / s; ++j)
                    sum += (long long)s * s * s_tile_h({{GenA, j * s}});
                for (int i = 0; i < L / m; ++i)
                    sum += (long long)m * m * m_tile_h({{GenB, s}, {GenA, i * m}});
            }
            break;
        case FlipKind::vertical:
            if (config == 0) {
                for (int j = 0; j < L / m; ++j)
                    sum += (long long)m * m * m_tile_h({{GenB, j * m}});
                for (int k = 0; k < L / s; ++k)
                    sum += (long long)s * s * s_tile_h({{GenA, m}, {GenB, k * s}});
            } else {
                for (int k = 0; k < L / s; ++k)
                    sum += (long long)s * s * s_tile_h({{GenB, k * s}});
                for (int j = 0; j < L / m; ++j)
                    sum += (long long)m * m * m_tile_h({{GenA, s}, {GenB, j * m}});
            }
            break;
        default:
            throw std::logic_error("drag has no block height");
    }
    return sum;
}

std::string gap_key(FlipKind kind, const GroupWord& w, int m, int s) {
    std::string key;
    key.reserve(w.f.size() * 3 + 3);
    key.push_back(static_cast<char>(kind));
    key.push_back(static_cast<char>(m));
    key.push_back(static_cast<char>(s));
    for (const Factor& f : w.f) {
        key.push_back(static_cast<char>(f.gen));
        key.push_back(static_cast<char>(f.exp & 0xff));
        key.push_back(static_cast<char>((f.exp >> 8) & 0xff));
    }
    return key;
}

}  // namespace

long long block_height_gap(FlipKind kind, const GroupWord& corner, int m, int s) {
    if (m == 1 || s == 1) return 0;
    static std::unordered_map<std::string, long long> cache;
    static std::mutex mu;
    const std::string key = gap_key(kind, corner, m, s);
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    long long gap = config_height_from_word(kind, 1, corner, m, s) -
                    config_height_from_word(kind, 0, corner, m, s);
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(key, gap);
    return gap;
}

}  // namespace tileflip
