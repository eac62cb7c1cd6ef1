#pragma once

#include <cstdint>
#include <optional>

#include "tileflip/height.hpp"
#include "tileflip/rational.hpp"
#include "tileflip/rng.hpp"
#include "tileflip/tiling.hpp"

namespace tileflip {

enum class ChainKind : uint8_t { uniform, weighted_1_2, weighted_1_s };

struct ChainConfig {
    ChainKind kind = ChainKind::uniform;
    Rat lambda{1};
    uint64_t seed = 0;
    RegionPtr region;
    int m = 1, s = 2;

    void validate() const;
};

// A chain instance: the current tiling plus the step counter that addresses
// the randomness stream. One site index, one direction bit and one uniform
// real are consumed every step, applicable or not, so coupled copies stay
// aligned on the shared stream.
class ChainState {
public:
    ChainState(ChainConfig cfg, Tiling initial);

    const Tiling& tiling() const { return tiling_; }
    const ChainConfig& config() const { return cfg_; }
    uint64_t step_count() const { return step_count_; }

    void step();

private:
    void step_uniform(const StepDraws& d);
    void step_weighted_1_2(const StepDraws& d);
    void step_weighted_1_s(const StepDraws& d);

    ChainConfig cfg_;
    Tiling tiling_;
    uint64_t step_count_ = 0;
    std::optional<HeightField> field_;  // maintained for uniform chains with m > 1
    std::vector<Vertex> sites_;
    double thr_unit_ = 0.5;  // 1/(lambda+1)
    double thr_drag_ = 0.125;  // lambda/(4(lambda+1))
};

struct CouplingResult {
    bool coupled = false;
    uint64_t steps = 0;
    Tiling final;
};

// Runs two copies of the chain on the identical randomness stream until
// they coincide (grand coupling). Once equal they stay equal.
CouplingResult grand_coupling(const ChainConfig& cfg, const Tiling& a0, const Tiling& b0,
                              uint64_t max_steps);

}  // namespace tileflip
