#pragma once

#include <optional>
#include <span>
#include <vector>

#include "tileflip/cayley.hpp"
#include "tileflip/tiling.hpp"

namespace tileflip {

// Integer heights on the skeleton vertices of a tiling of a flat region,
// obtained by replaying boundary-respecting lattice paths on the weighted
// Cayley graph of <a,b | a^m, b^s>. Heights on the region boundary depend
// only on the region; the whole field is path-independent.
class HeightField {
public:
    HeightField(const Tiling& t, Vertex base, long long base_height);

    bool present(Vertex v) const;
    long long height(Vertex v) const;
    const GroupWord& word(Vertex v) const;

    Vertex base() const { return base_; }
    long long base_height() const { return base_height_; }

    // All skeleton vertices, row-major.
    std::vector<Vertex> vertices() const;

    // Recomputes the field strictly inside a block after its configuration
    // changed; boundary entries are reused as BFS seeds.
    void refresh_block(const Tiling& t, Cell origin, int w, int h);

private:
    size_t vidx(Vertex v) const;
    void bfs_fill(const Tiling& t, const std::vector<Vertex>& seeds,
                  Cell lo, Cell hi, bool interior_only);

    int ox_, oy_, vw_, vh_;  // vertex grid bounds
    int m_, s_;
    Vertex base_;
    long long base_height_;
    std::vector<uint8_t> present_;
    std::vector<long long> weight_;
    std::vector<GroupWord> words_;
};

// True if the unit lattice edge from v in direction d (0:+x, 1:+y, 2:-x,
// 3:-y) lies on the skeleton: on a tile border or the region border.
bool skeleton_edge(const Tiling& t, Vertex v, int dir);

HeightField vertex_heights(const Tiling& t, Vertex base, long long base_height);
HeightField vertex_heights(const Tiling& t);  // base = region lower-left corner, height 0

long long tile_height(const Tiling& t, const HeightField& field, Tile tile);
long long total_height(const Tiling& t);
long long total_height(const Tiling& t, const HeightField& field);

// Descent objective: total height for m > 1; for the degenerate m = 1 case
// the big-square count stands in for the Hamming height, whose unique
// minimum is the all-units tiling.
long long descent_height(const Tiling& t);

// Walks an explicit lattice path (sequence of adjacent vertices starting at
// the field base) along skeleton edges and returns the endpoint height.
// Throws if a step leaves the skeleton. Test oracle for path independence.
long long replay_path(const Tiling& t, std::span<const Vertex> path);

// Height difference between the two configurations of a block whose corner
// (lower-left) vertex carries the given Cayley word:
// h(config 1) - h(config 0). Memoized by word content.
long long block_height_gap(FlipKind kind, const GroupWord& corner, int m, int s);

}  // namespace tileflip
