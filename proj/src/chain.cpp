#include "tileflip/chain.hpp"

#include <cassert>
#include <stdexcept>

namespace tileflip {

void ChainConfig::validate() const {
    if (!region) throw std::invalid_argument("chain config needs a region");
    if (m < 1 || s <= m) throw std::invalid_argument("need 1 <= m < s");
    if (lambda.num <= 0) throw std::invalid_argument("lambda must be positive");
    switch (kind) {
        case ChainKind::uniform:
            if (lambda != Rat(1))
                throw std::invalid_argument("uniform chain has lambda = 1");
            if (m > 1 && region->is_torus())
                throw std::invalid_argument(
                    "uniform chain with m > 1 needs a flat region (heights undefined on tori)");
            break;
        case ChainKind::weighted_1_2:
            if (m != 1 || s != 2 || !region->is_torus())
                throw std::invalid_argument("weighted (1,2) chain needs tiles 1,2 on a torus");
            break;
        case ChainKind::weighted_1_s:
            if (m != 1) throw std::invalid_argument("weighted (1,s) chain needs m = 1");
            break;
    }
}

ChainState::ChainState(ChainConfig cfg, Tiling initial)
    : cfg_(std::move(cfg)), tiling_(std::move(initial)) {
    cfg_.validate();
    if (tiling_.region_ptr().get() != cfg_.region.get() || tiling_.m() != cfg_.m ||
        tiling_.s() != cfg_.s)
        throw std::invalid_argument("initial tiling does not match the chain config");
    sites_ = cfg_.region->inner_vertices();
    if (sites_.empty()) throw std::invalid_argument("region has no sites");
    const double lam = cfg_.lambda.to_double();
    thr_unit_ = 1.0 / (lam + 1.0);
    thr_drag_ = lam / (4.0 * (lam + 1.0));
    if (cfg_.kind == ChainKind::uniform && cfg_.m > 1)
        field_.emplace(tiling_, cfg_.region->base_vertex(), 0);
}

void ChainState::step() {
    const StepDraws d = draws_for(cfg_.seed, step_count_);
    switch (cfg_.kind) {
        case ChainKind::uniform: step_uniform(d); break;
        case ChainKind::weighted_1_2: step_weighted_1_2(d); break;
        case ChainKind::weighted_1_s: step_weighted_1_s(d); break;
    }
    ++step_count_;
}

void ChainState::step_uniform(const StepDraws& d) {
    Vertex site = sites_[bounded_index(d.site_raw, static_cast<uint32_t>(sites_.size()))];
    FlipDir dir = d.dir_up ? FlipDir::up : FlipDir::down;
    auto f = find_flip(tiling_, site, dir, field_ ? &*field_ : nullptr);
    if (!f) return;
    apply_flip_inplace(tiling_, *f);
    if (field_) {
        auto [w, h] = tiling_.block_dims_of(f->kind);
        field_->refresh_block(tiling_, f->block_origin, w, h);
    }
}

void ChainState::step_weighted_1_2(const StepDraws& d) {
    const Region& reg = *cfg_.region;
    Vertex v = sites_[bounded_index(d.site_raw, static_cast<uint32_t>(sites_.size()))];
    Cell o = reg.wrap(v - Cell{1, 1});  // anchor of the big square centered at v
    if (tiling_.has_anchor(o, 2)) {
        // Resample the block: units with probability 1/(lambda+1).
        if (d.unit < thr_unit_) tiling_.write_block_config(FlipKind::central, o, 0);
        return;
    }
    int neighbors = 0;
    Cell u{};
    for (int dy = -1; dy <= 1; ++dy)
        for (int dx = -1; dx <= 1; ++dx) {
            if (dx == 0 && dy == 0) continue;
            Cell a = reg.wrap(o + Cell{dx, dy});
            if (tiling_.has_anchor(a, 2)) {
                ++neighbors;
                u = a;
            }
        }
    if (neighbors == 0) {
        if (d.unit >= thr_unit_) tiling_.write_block_config(FlipKind::central, o, 1);
    } else if (neighbors == 1) {
        if (d.unit < thr_drag_) tiling_.move_big(u, o);
    }
    // two or more occupied neighbors: hold
}

void ChainState::step_weighted_1_s(const StepDraws& d) {
    const int s = cfg_.s;
    Vertex v = sites_[bounded_index(d.site_raw, static_cast<uint32_t>(sites_.size()))];
    Cell o = v - Cell{s - 1, s - 1};
    if (!tiling_.block_in_region(o, s, s)) return;
    int c = tiling_.read_block_config(FlipKind::central, o);
    if (c == 1) {
        if (d.unit < thr_unit_) tiling_.write_block_config(FlipKind::central, o, 0);
    } else if (c == 0) {
        if (d.unit >= thr_unit_) tiling_.write_block_config(FlipKind::central, o, 1);
    }
}

CouplingResult grand_coupling(const ChainConfig& cfg, const Tiling& a0, const Tiling& b0,
                              uint64_t max_steps) {
    ChainState a(cfg, a0), b(cfg, b0);
    auto equal = [&] {
        return a.tiling().hash() == b.tiling().hash() && a.tiling() == b.tiling();
    };
    bool met = equal();
    uint64_t met_at = 0;
    for (uint64_t t = 1; !met && t <= max_steps; ++t) {
        a.step();
        b.step();
        if (equal()) {
            met = true;
            met_at = t;
        }
    }
#ifndef NDEBUG
    if (met) {
        // Coalescence permanence spot-check on copies.
        ChainState a2 = a, b2 = b;
        for (int i = 0; i < 64; ++i) {
            a2.step();
            b2.step();
            assert(a2.tiling() == b2.tiling());
        }
    }
#endif
    return CouplingResult{met, met_at, a.tiling()};
}

}  // namespace tileflip
