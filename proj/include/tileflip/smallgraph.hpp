#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "tileflip/chain.hpp"
#include "tileflip/rational.hpp"
#include "tileflip/tiling.hpp"

namespace tileflip {

// Exhaustive enumeration of all (m,s)-tilings of a small region by
// depth-first fill of the first uncovered cell. Throws when the count
// exceeds the budget.
std::vector<Tiling> enumerate_tilings(const RegionPtr& region, int m, int s,
                                      long long budget = 1'000'000);

std::string tiling_key_string(const Tiling& t);

// All tilings of a region, flip edges between them, and the exact
// transition matrix of a chosen chain in rational arithmetic.
struct TilingGraph {
    ChainConfig chain;
    std::vector<Tiling> verts;
    std::unordered_map<std::string, int> index;
    std::vector<std::vector<int>> adj;                      // flip edges
    std::vector<std::vector<std::pair<int, Rat>>> rows;     // sparse P, diag included

    int find(const Tiling& t) const;
    Rat prob(int i, int j) const;
    bool connected() const;
};

TilingGraph build_flip_graph(std::vector<Tiling> tilings, const ChainConfig& chain);

struct StationaryReport {
    bool ok = false;
    double max_residual = 0.0;
    bool symmetric = false;       // uniform chains
    bool detailed_balance = false;
    std::string note;
};

// Verifies pi P = pi exactly: uniform pi for the uniform chain, pi
// proportional to lambda^{#big} for the weighted chains.
StationaryReport stationary_check(const TilingGraph& g);

struct GraphStats {
    int diameter = 0;
    long long edges = 0;
    std::vector<long long> degree_histogram;
};

GraphStats graph_stats(const TilingGraph& g);

// Canonical flip path for (1,2) tilings of a flat rectangle: sweep the
// inner vertices in column-major order, performing at most one flip per
// vertex when it decreases the cell-wise Hamming distance to the target.
struct CanonicalPath {
    bool ok = false;
    std::vector<Flip> flips;
    std::string diagnostic;
};

CanonicalPath canonical_path(const Tiling& from, const Tiling& to);

long long hamming_cells(const Tiling& a, const Tiling& b);

struct CongestionReport {
    long long max_paths_through_edge = 0;
    long long pairs = 0;
    long long failures = 0;
    long long max_path_len = 0;
};

// Routes canonical paths between every ordered pair and counts paths per
// flip-graph edge.
CongestionReport congestion_check(const TilingGraph& g);

}  // namespace tileflip
