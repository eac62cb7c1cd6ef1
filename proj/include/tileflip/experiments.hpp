#pragma once

#include <string>
#include <vector>

#include "tileflip/chain.hpp"
#include "tileflip/rational.hpp"
#include "tileflip/tiling.hpp"

namespace tileflip {

struct CouplingCell {
    int n = 0, s = 0;
    double lambda = 1.0;
    int trials = 0;
    double mean = 0.0;
    double stderr_ = 0.0;
    long long min = 0, max = 0;
    int censored = 0;  // trials that hit max_steps; excluded from the mean
    std::vector<long long> times;  // uncensored coupling times, by trial
};

// Grand-coupling times of the uniform chain on rect(n,n) (1,s) tilings,
// started from the greedy max tiling and the all-units tiling. Trials run
// in parallel (TILEFLIP_THREADS caps the pool); the aggregation is a
// deterministic fold by trial index.
CouplingCell coupling_cell(int n, int s, int trials, uint64_t seed_base, uint64_t max_steps);
std::vector<CouplingCell> coupling_time_table(const std::vector<int>& ns,
                                              const std::vector<int>& ss, int trials,
                                              uint64_t seed_base, uint64_t max_steps);
std::string table_to_csv(const std::vector<CouplingCell>& cells);

struct ContractionReport {
    Rat max_delta{0};          // max over flip-adjacent pairs of E[delta phi]
    Rat paper_bound{0};        // worst-case bound from the bad-site count
    int worst_bad_sites = 0;
    long long pairs = 0;
    long long tilings = 0;
    // Witness pair achieving the maximum: big-square anchors of the smaller
    // tiling plus the extra anchor of the larger one.
    std::vector<Cell> witness_anchors;
    Cell witness_extra{};
};

// Exhaustive one-step expected change of the flip distance over all pairs
// of (1,s) tilings at distance 1, under the shared-randomness coupling of
// the weighted (1,s) chain.
ContractionReport contraction_check(const RegionPtr& region, int s, Rat lambda);

struct OccupancyMap {
    int ox = 0, oy = 0, w = 0, h = 0;
    long long samples = 0;
    std::vector<double> frac;  // fraction of samples with the cell under an s-tile; -1 outside

    double at(Cell c) const { return frac[static_cast<size_t>(c.y - oy) * w + (c.x - ox)]; }
    bool inside(Cell c) const {
        return c.x >= ox && c.y >= oy && c.x < ox + w && c.y < oy + h && at(c) >= 0.0;
    }
};

OccupancyMap occupancy_map(const ChainConfig& cfg, const Tiling& initial, uint64_t burn_in,
                           long long samples, uint64_t thinning);

struct GrowthFit {
    int s = 0;
    double slope = 0.0;
    int points = 0;
};

// Least-squares slope of log(mean coupling time) against log(n), per s.
std::vector<GrowthFit> growth_fit(const std::vector<CouplingCell>& cells);

int worker_threads();  // TILEFLIP_THREADS, defaulting to the hardware count

}  // namespace tileflip
