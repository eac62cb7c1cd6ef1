#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "tileflip/rational.hpp"
#include "tileflip/rng.hpp"
#include "tileflip/tiling.hpp"

namespace tileflip {

// Independent sets on the 8-adjacency (king) graph over an n x n torus,
// stored as vertex bitmasks (n <= 8). Vertex v = (x, y) has index y*n + x.
struct KingGraph {
    int n;
    explicit KingGraph(int n);
    int vertices() const { return n * n; }
    uint64_t neighbor_mask(int v) const { return nbr_[v]; }
    std::vector<uint64_t> nbr_;
};

using IndSet = uint64_t;

bool is_independent(const KingGraph& g, IndSet x);

// Calls fn for every independent set. Exhaustive; n <= 6 enforced.
void enumerate_independent_sets(const KingGraph& g, const std::function<void(IndSet)>& fn);

// Exact Z(lambda) = sum over independent sets of lambda^|X|.
Rat partition_function(const KingGraph& g, Rat lambda);
std::vector<long long> independent_set_counts(const KingGraph& g);  // by size

// One step of the delete/insert/drag chain. Consumes the standard step-draw
// layout: vertex from the site word, action from the uniform real.
IndSet mc_drag_step(const KingGraph& g, IndSet x, double lambda, const StepDraws& d);

// Exact transition row of MC_drag from state x.
std::vector<std::pair<IndSet, Rat>> mc_drag_row(const KingGraph& g, IndSet x, Rat lambda);

// Big squares of a (1,2) torus tiling map to their interior lattice vertex
// (anchor + (1,1)); this is a bijection with king-graph independent sets.
IndSet tiling_to_indset(const Tiling& t);
Tiling indset_to_tiling(IndSet x, const RegionPtr& torus_region);

}  // namespace tileflip
