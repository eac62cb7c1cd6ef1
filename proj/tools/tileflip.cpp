#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "tileflip/chain.hpp"
#include "tileflip/experiments.hpp"
#include "tileflip/indsets.hpp"
#include "tileflip/render.hpp"
#include "tileflip/serialize.hpp"
#include "tileflip/smallgraph.hpp"

using namespace tileflip;

namespace {

std::pair<int, int> parse_tiles(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos) throw CLI::ValidationError("--tiles expects m,s");
    return {std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1))};
}

std::vector<int> parse_range(const std::string& text) {
    auto dots = text.find("..");
    if (dots == std::string::npos) return {std::stoi(text)};
    int lo = std::stoi(text.substr(0, dots)), hi = std::stoi(text.substr(dots + 2));
    std::vector<int> out;
    for (int v = lo; v <= hi; ++v) out.push_back(v);
    return out;
}

ChainKind parse_chain(const std::string& name) {
    if (name == "uniform") return ChainKind::uniform;
    if (name == "w12") return ChainKind::weighted_1_2;
    if (name == "w1s") return ChainKind::weighted_1_s;
    throw CLI::ValidationError("--chain must be uniform, w12 or w1s");
}

void emit(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-")
        std::cout << content;
    else
        write_file(path, content);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Square-tiling flip chains: sampling, coupling and exhaustive checks"};
    app.require_subcommand(1);

    // --- sample ---
    auto* sample = app.add_subcommand("sample", "Run a chain and emit the final tiling");
    std::string sm_region, sm_tiles = "1,2", sm_chain = "uniform", sm_lambda = "1",
                sm_out, sm_format = "json", sm_init = "small";
    uint64_t sm_seed = 0, sm_steps = 100000, sm_snap = 0;
    sample->add_option("--region", sm_region, "region file or spec (rect:WxH, torus:N, stairhex:S,M,S)")
        ->required();
    sample->add_option("--tiles", sm_tiles, "tile sides m,s (default 1,2)");
    sample->add_option("--chain", sm_chain, "uniform|w12|w1s (default uniform)");
    sample->add_option("--lambda", sm_lambda, "big-square weight, e.g. 1/3 (default 1)");
    sample->add_option("--seed", sm_seed, "random stream seed (default 0)");
    sample->add_option("--steps", sm_steps, "chain steps (default 100000)");
    sample->add_option("--snapshot-every", sm_snap, "emit intermediate tilings every N steps");
    sample->add_option("--init", sm_init, "initial tiling: small|big (default small)");
    sample->add_option("-o,--out", sm_out, "output path (default stdout)");
    sample->add_option("--format", sm_format, "json|svg (default json)");

    // --- couple ---
    auto* couple = app.add_subcommand("couple", "Grand-coupling trials; per-trial times as CSV");
    std::string cp_region, cp_tiles = "1,2";
    int cp_trials = 10;
    uint64_t cp_seed_base = 0, cp_max_steps = 1000000000ull;
    couple->add_option("--region", cp_region, "region file or spec")->required();
    couple->add_option("--tiles", cp_tiles, "tile sides m,s (default 1,2)");
    couple->add_option("--trials", cp_trials, "number of trials (default 10)");
    couple->add_option("--seed-base", cp_seed_base, "base seed (default 0)");
    couple->add_option("--max-steps", cp_max_steps, "censoring limit (default 1e9)");

    // --- table1 ---
    auto* table = app.add_subcommand("table1", "Average coupling times over (n, s) grid as CSV");
    std::string tb_n = "10..12", tb_s = "2..3", tb_out;
    int tb_trials = 100;
    uint64_t tb_seed = 42, tb_max_steps = 1000000000ull;
    table->add_option("--n", tb_n, "n range, e.g. 10..16 (default 10..12)");
    table->add_option("--s", tb_s, "s range, e.g. 2..4 (default 2..3)");
    table->add_option("--trials", tb_trials, "trials per cell (default 100)");
    table->add_option("--seed-base", tb_seed, "base seed (default 42)");
    table->add_option("--max-steps", tb_max_steps, "censoring limit (default 1e9)");
    table->add_option("-o,--out", tb_out, "output path (default stdout)");

    // --- enumerate ---
    auto* enumer = app.add_subcommand("enumerate", "Exhaustively enumerate tilings of a region");
    std::string en_region, en_tiles = "1,2", en_emit, en_chain = "uniform", en_lambda = "1";
    long long en_budget = 1000000;
    bool en_matrix = false;
    enumer->add_option("--region", en_region, "region file or spec")->required();
    enumer->add_option("--tiles", en_tiles, "tile sides m,s (default 1,2)");
    enumer->add_option("--emit", en_emit, "write the flip graph JSON here");
    enumer->add_option("--budget", en_budget, "enumeration budget (default 1e6)");
    enumer->add_option("--chain", en_chain, "chain for the transition matrix (default uniform)");
    enumer->add_option("--lambda", en_lambda, "weight for weighted chains (default 1)");
    enumer->add_flag("--matrix", en_matrix, "include the exact transition matrix in the JSON");

    // --- height ---
    auto* height = app.add_subcommand("height", "Total height and potential of a tiling");
    std::string ht_tiling, ht_emit;
    height->add_option("--tiling", ht_tiling, "tiling JSON file")->required();
    height->add_option("--emit", ht_emit, "write the vertex height field JSON here");

    // --- render ---
    auto* render = app.add_subcommand("render", "Render a tiling as SVG");
    std::string rd_tiling, rd_out, rd_overlay = "none";
    int rd_px = 16;
    render->add_option("--tiling", rd_tiling, "tiling JSON file")->required();
    render->add_option("--overlay", rd_overlay, "none|heights|anchors (default none)");
    render->add_option("--cell-px", rd_px, "pixels per cell (default 16)");
    render->add_option("-o,--out", rd_out, "output path (default stdout)");

    // --- indset-check ---
    auto* inds = app.add_subcommand("indset-check",
                                    "Compare the (1,2) torus chain with the king-graph drag chain");
    int is_n = 4;
    std::string is_lambda = "1/4";
    inds->add_option("--n", is_n, "torus side (default 4)");
    inds->add_option("--lambda", is_lambda, "weight (default 1/4)");

    // --- contraction ---
    auto* contr = app.add_subcommand("contraction",
                                     "Exhaustive one-step path-coupling contraction check");
    std::string ct_region, ct_tiles = "1,2", ct_lambda = "1/7";
    contr->add_option("--region", ct_region, "flat region file or spec")->required();
    contr->add_option("--tiles", ct_tiles, "tile sides 1,s (default 1,2)");
    contr->add_option("--lambda", ct_lambda, "weight (default 1/7)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*sample) {
            auto [m, s] = parse_tiles(sm_tiles);
            RegionPtr region = load_region_arg(sm_region);
            ChainConfig cfg;
            cfg.kind = parse_chain(sm_chain);
            cfg.lambda = parse_rational(sm_lambda);
            cfg.seed = sm_seed;
            cfg.region = region;
            cfg.m = m;
            cfg.s = s;
            Tiling init = sm_init == "big" ? Tiling::greedy_big(region, m, s)
                                           : Tiling::all_small(region, m, s);
            ChainState st(cfg, std::move(init));
            for (uint64_t i = 1; i <= sm_steps; ++i) {
                st.step();
                if (sm_snap > 0 && i % sm_snap == 0 && !sm_out.empty() && sm_out != "-") {
                    std::string path = sm_out + "." + std::to_string(i);
                    emit(path, sm_format == "svg" ? render_svg(st.tiling(), {})
                                                  : tiling_to_json(st.tiling()));
                }
            }
            emit(sm_out, sm_format == "svg" ? render_svg(st.tiling(), {})
                                            : tiling_to_json(st.tiling()));
        } else if (*couple) {
            auto [m, s] = parse_tiles(cp_tiles);
            if (m != 1) throw std::invalid_argument("couple drives the (1,s) uniform chain");
            RegionPtr region = load_region_arg(cp_region);
            Tiling a0 = Tiling::greedy_big(region, m, s);
            Tiling b0 = Tiling::all_small(region, m, s);
            std::cout << "trial,steps,coupled\n";
            for (int t = 0; t < cp_trials; ++t) {
                ChainConfig cfg;
                cfg.kind = ChainKind::uniform;
                cfg.region = region;
                cfg.m = m;
                cfg.s = s;
                cfg.seed = trial_seed(cp_seed_base, static_cast<uint64_t>(t));
                CouplingResult r = grand_coupling(cfg, a0, b0, cp_max_steps);
                std::cout << t << "," << r.steps << "," << (r.coupled ? 1 : 0) << "\n";
            }
        } else if (*table) {
            auto cells = coupling_time_table(parse_range(tb_n), parse_range(tb_s), tb_trials,
                                             tb_seed, tb_max_steps);
            emit(tb_out, table_to_csv(cells));
        } else if (*enumer) {
            auto [m, s] = parse_tiles(en_tiles);
            RegionPtr region = load_region_arg(en_region);
            auto tilings = enumerate_tilings(region, m, s, en_budget);
            ChainConfig cfg;
            cfg.kind = parse_chain(en_chain);
            cfg.lambda = cfg.kind == ChainKind::uniform ? Rat(1) : parse_rational(en_lambda);
            cfg.region = region;
            cfg.m = m;
            cfg.s = s;
            TilingGraph g = build_flip_graph(std::move(tilings), cfg);
            std::cerr << "tilings: " << g.verts.size() << ", connected: " << g.connected()
                      << "\n";
            if (!en_emit.empty()) write_file(en_emit, graph_to_json(g, en_matrix));
        } else if (*height) {
            Tiling t = tiling_from_json(read_file(ht_tiling));
            std::cout << "total_height " << total_height(t) << "\n";
            std::cout << "potential " << t.potential() << "\n";
            if (!ht_emit.empty()) {
                HeightField f = vertex_heights(t);
                write_file(ht_emit, heightfield_to_json(f));
            }
        } else if (*render) {
            Tiling t = tiling_from_json(read_file(rd_tiling));
            RenderOptions opts;
            opts.cell_pixel_size = rd_px;
            if (rd_overlay == "heights")
                opts.overlay = Overlay::heights;
            else if (rd_overlay == "anchors")
                opts.overlay = Overlay::anchors;
            else if (rd_overlay != "none")
                throw std::invalid_argument("--overlay must be none, heights or anchors");
            emit(rd_out, render_svg(t, opts));
        } else if (*inds) {
            Rat lambda = parse_rational(is_lambda);
            RegionPtr region = std::make_shared<Region>(Region::torus(is_n));
            auto tilings = enumerate_tilings(region, 1, 2);
            ChainConfig cfg;
            cfg.kind = ChainKind::weighted_1_2;
            cfg.lambda = lambda;
            cfg.region = region;
            cfg.m = 1;
            cfg.s = 2;
            TilingGraph g = build_flip_graph(std::move(tilings), cfg);
            KingGraph king(is_n);
            // Conjugate the tiling matrix through the bijection and compare
            // with the drag-chain matrix entry by entry.
            std::vector<IndSet> sets;
            enumerate_independent_sets(king, [&](IndSet x) { sets.push_back(x); });
            std::unordered_map<IndSet, int> set_index;
            for (size_t i = 0; i < sets.size(); ++i) set_index[sets[i]] = static_cast<int>(i);
            if (sets.size() != g.verts.size())
                throw std::runtime_error("bijection count mismatch");
            Rat max_diff(0);
            for (size_t i = 0; i < g.verts.size(); ++i) {
                IndSet xi = tiling_to_indset(g.verts[i]);
                std::unordered_map<IndSet, Rat> drag_row;
                for (const auto& [y, p] : mc_drag_row(king, xi, lambda)) drag_row[y] += p;
                std::unordered_map<IndSet, Rat> til_row;
                for (const auto& [j, p] : g.rows[i]) til_row[tiling_to_indset(g.verts[j])] += p;
                for (const auto& [xs, p] : drag_row) {
                    Rat q = til_row.count(xs) ? til_row[xs] : Rat(0);
                    Rat d = p - q;
                    if (d.num < 0) d = Rat(0) - d;
                    if (d > max_diff) max_diff = d;
                }
                for (const auto& [xs, q] : til_row)
                    if (!drag_row.count(xs)) {
                        Rat d = q;
                        if (d.num < 0) d = Rat(0) - d;
                        if (d > max_diff) max_diff = d;
                    }
            }
            std::cout << "states " << g.verts.size() << "\n";
            std::cout << "max_abs_difference " << max_diff.str() << " ("
                      << max_diff.to_double() << ")\n";
        } else if (*contr) {
            auto [m, s] = parse_tiles(ct_tiles);
            if (m != 1) throw std::invalid_argument("contraction check applies to (1,s) tilings");
            RegionPtr region = load_region_arg(ct_region);
            ContractionReport rep = contraction_check(region, s, parse_rational(ct_lambda));
            std::cout << "tilings " << rep.tilings << "\n";
            std::cout << "pairs " << rep.pairs << "\n";
            std::cout << "max_E_delta_phi " << rep.max_delta.str() << " ("
                      << rep.max_delta.to_double() << ")\n";
            std::cout << "paper_worst_case " << rep.paper_bound.str() << " ("
                      << rep.paper_bound.to_double() << ")\n";
            std::cout << "worst_bad_sites " << rep.worst_bad_sites << "\n";
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
