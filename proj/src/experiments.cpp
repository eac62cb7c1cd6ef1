#include "tileflip/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <thread>

namespace tileflip {

int worker_threads() {
    if (const char* env = std::getenv("TILEFLIP_THREADS")) {
        int n = std::atoi(env);
        if (n >= 1) return n;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

CouplingCell coupling_cell(int n, int s, int trials, uint64_t seed_base, uint64_t max_steps) {
    CouplingCell cell;
    cell.n = n;
    cell.s = s;
    cell.trials = trials;
    RegionPtr region = std::make_shared<Region>(Region::rectangle(n, n));
    const Tiling a0 = Tiling::greedy_big(region, 1, s);
    const Tiling b0 = Tiling::all_small(region, 1, s);
    const uint64_t cell_seed = mix64(seed_base ^ mix64((uint64_t)n * 1000 + s));

    std::vector<long long> raw(trials, -1);
    std::atomic<int> next{0};
    auto work = [&] {
        for (;;) {
            int t = next.fetch_add(1);
            if (t >= trials) return;
            ChainConfig cfg;
            cfg.kind = ChainKind::uniform;
            cfg.region = region;
            cfg.m = 1;
            cfg.s = s;
            cfg.seed = trial_seed(cell_seed, static_cast<uint64_t>(t));
            CouplingResult r = grand_coupling(cfg, a0, b0, max_steps);
            raw[t] = r.coupled ? static_cast<long long>(r.steps) : -1;
        }
    };
    int pool = std::min(worker_threads(), trials);
    std::vector<std::thread> threads;
    for (int i = 1; i < pool; ++i) threads.emplace_back(work);
    work();
    for (auto& th : threads) th.join();

    double sum = 0, sum2 = 0;
    for (long long v : raw) {
        if (v < 0) {
            ++cell.censored;
            continue;
        }
        cell.times.push_back(v);
        sum += static_cast<double>(v);
        sum2 += static_cast<double>(v) * static_cast<double>(v);
        cell.min = cell.times.size() == 1 ? v : std::min(cell.min, v);
        cell.max = std::max(cell.max, v);
    }
    const double k = static_cast<double>(cell.times.size());
    if (k > 0) cell.mean = sum / k;
    if (k > 1) cell.stderr_ = std::sqrt((sum2 - k * cell.mean * cell.mean) / (k - 1) / k);
    return cell;
}

std::vector<CouplingCell> coupling_time_table(const std::vector<int>& ns,
                                              const std::vector<int>& ss, int trials,
                                              uint64_t seed_base, uint64_t max_steps) {
    std::vector<CouplingCell> out;
    for (int n : ns)
        for (int s : ss) {
            if (s > n) continue;
            out.push_back(coupling_cell(n, s, trials, seed_base, max_steps));
        }
    return out;
}

std::string table_to_csv(const std::vector<CouplingCell>& cells) {
    std::string csv = "n,s,lambda,trials,mean,stderr,min,max,censored\n";
    char buf[256];
    for (const auto& c : cells) {
        std::snprintf(buf, sizeof buf, "%d,%d,%.17g,%d,%.17g,%.17g,%lld,%lld,%d\n", c.n, c.s,
                      c.lambda, c.trials, c.mean, c.stderr_, c.min, c.max, c.censored);
        csv += buf;
    }
    return csv;
}

ContractionReport contraction_check(const RegionPtr& region, int s, Rat lambda) {
    if (region->is_torus()) throw std::invalid_argument("contraction check runs on flat regions");
    ContractionReport rep;

    // Anchor positions where an s-square fits.
    std::vector<Cell> anchors;
    {
        Tiling probe = Tiling::all_small(region, 1, s);
        for (Cell c : region->cells())
            if (probe.block_in_region(c, s, s)) anchors.push_back(c);
    }
    const int A = static_cast<int>(anchors.size());
    if (A > 63) throw std::invalid_argument("region too large for exhaustive contraction check");

    // conflict[i] = anchors whose footprint overlaps anchor i's footprint.
    std::vector<uint64_t> conflict(A, 0);
    for (int i = 0; i < A; ++i)
        for (int j = 0; j < A; ++j)
            if (std::abs(anchors[i].x - anchors[j].x) < s &&
                std::abs(anchors[i].y - anchors[j].y) < s)
                conflict[i] |= 1ull << j;

    const long long n_sites = static_cast<long long>(region->inner_vertices().size());
    const Rat p_big = lambda / (lambda + Rat(1));

    // For a pair (T, T + beta), a site is bad when its block overlaps
    // beta's footprint, is not beta itself, and reads all-units in T; the
    // copy without the big square then places one with probability
    // lambda/(lambda+1), moving the pair to distance 2. The site of beta
    // itself coalesces the pair under either outcome.
    std::function<void(int, uint64_t, uint64_t)> rec = [&](int i, uint64_t set, uint64_t blocked) {
        if (i == A) {
            ++rep.tilings;
            for (int b = 0; b < A; ++b) {
                if ((blocked >> b) & 1) continue;  // not addable
                ++rep.pairs;
                int bad = 0;
                for (int v = 0; v < A; ++v) {
                    if (v == b) continue;
                    if (!((conflict[b] >> v) & 1)) continue;  // block disjoint from beta
                    if ((set & conflict[v]) == 0) ++bad;      // all-units in T at v
                }
                Rat delta = (Rat(-1) + Rat(bad) * p_big) * Rat(1, n_sites);
                if (rep.pairs == 1 || delta > rep.max_delta) {
                    rep.max_delta = delta;
                    rep.worst_bad_sites = bad;
                    rep.witness_anchors.clear();
                    for (int v = 0; v < A; ++v)
                        if ((set >> v) & 1) rep.witness_anchors.push_back(anchors[v]);
                    rep.witness_extra = anchors[b];
                }
            }
            return;
        }
        rec(i + 1, set, blocked);
        if (!((blocked >> i) & 1)) rec(i + 1, set | (1ull << i), blocked | conflict[i]);
    };
    rec(0, 0, 0);

    const long long worst = (2LL * s - 1) * (2LL * s - 1) - 1;
    rep.paper_bound = (Rat(-1) + Rat(worst) * p_big) * Rat(1, n_sites);
    return rep;
}

OccupancyMap occupancy_map(const ChainConfig& cfg, const Tiling& initial, uint64_t burn_in,
                           long long samples, uint64_t thinning) {
    if (samples < 1 || thinning < 1) throw std::invalid_argument("need samples, thinning >= 1");
    const Region& reg = *cfg.region;
    OccupancyMap map;
    map.ox = reg.origin_x();
    map.oy = reg.origin_y();
    map.w = reg.bbox_w();
    map.h = reg.bbox_h();
    map.frac.assign(static_cast<size_t>(map.w) * map.h, -1.0);
    std::vector<long long> hits(map.frac.size(), 0);
    const auto cells = reg.cells();
    for (Cell c : cells)
        map.frac[static_cast<size_t>(c.y - map.oy) * map.w + (c.x - map.ox)] = 0.0;

    ChainState st(cfg, initial);
    for (uint64_t i = 0; i < burn_in; ++i) st.step();
    for (long long k = 0; k < samples; ++k) {
        for (uint64_t i = 0; i < thinning; ++i) st.step();
        for (Cell c : cells)
            if (st.tiling().tile_at(c).side == cfg.s)
                ++hits[static_cast<size_t>(c.y - map.oy) * map.w + (c.x - map.ox)];
    }
    map.samples = samples;
    for (Cell c : cells) {
        size_t i = static_cast<size_t>(c.y - map.oy) * map.w + (c.x - map.ox);
        map.frac[i] = static_cast<double>(hits[i]) / static_cast<double>(samples);
    }
    return map;
}

std::vector<GrowthFit> growth_fit(const std::vector<CouplingCell>& cells) {
    std::vector<GrowthFit> out;
    std::vector<int> ss;
    for (const auto& c : cells)
        if (std::find(ss.begin(), ss.end(), c.s) == ss.end()) ss.push_back(c.s);
    std::sort(ss.begin(), ss.end());
    for (int s : ss) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        int k = 0;
        for (const auto& c : cells) {
            if (c.s != s || c.mean <= 0) continue;
            double x = std::log(static_cast<double>(c.n));
            double y = std::log(c.mean);
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
            ++k;
        }
        GrowthFit fit;
        fit.s = s;
        fit.points = k;
        if (k >= 2) {
            double denom = k * sxx - sx * sx;
            fit.slope = denom == 0 ? 0.0 : (k * sxy - sx * sy) / denom;
        }
        out.push_back(fit);
    }
    return out;
}

}  // namespace tileflip
