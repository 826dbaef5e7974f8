#include "polarq/density_evolution.hpp"

#include <algorithm>
#include <stdexcept>

#include "polarq/float_decode.hpp"

namespace polarq {

DiscreteDistribution f_output_distribution(const DiscreteDistribution& da,
                                           const DiscreteDistribution& db) {
    std::vector<double> values, probs;
    values.reserve(da.size() * db.size());
    probs.reserve(da.size() * db.size());
    for (int i = 0; i < da.size(); ++i)
        for (int j = 0; j < db.size(); ++j) {
            values.push_back(f_fn(da.values[i], db.values[j]));
            probs.push_back(da.probs[i] * db.probs[j]);
        }
    return merge_duplicates(std::move(values), std::move(probs));
}

DiscreteDistribution g_output_distribution(const DiscreteDistribution& da,
                                           const DiscreteDistribution& db) {
    std::vector<double> values, probs;
    values.reserve(2 * da.size() * db.size());
    probs.reserve(2 * da.size() * db.size());
    for (int i = 0; i < da.size(); ++i)
        for (int j = 0; j < db.size(); ++j) {
            double p = 0.5 * da.probs[i] * db.probs[j];
            for (int u = 0; u < 2; ++u) {
                values.push_back(g_fn(da.values[i], db.values[j], u));
                probs.push_back(p);
            }
        }
    return merge_duplicates(std::move(values), std::move(probs));
}

namespace {

int locate_exact(const DiscreteDistribution& merged, double value) {
    auto it = std::lower_bound(merged.values.begin(), merged.values.end(), value);
    if (it == merged.values.end() || *it != value)
        throw std::logic_error("build_node_luts: f/g value missing from merged alphabet");
    return static_cast<int>(it - merged.values.begin());
}

}  // namespace

NodeLuts build_node_luts(const DiscreteDistribution& da, const DiscreteDistribution& db,
                         const DiscreteDistribution& f_merged, const Quantizer& qf,
                         const DiscreteDistribution& g_merged, const Quantizer& qg) {
    NodeLuts luts;
    const int ma = da.size();
    const int mb = db.size();
    luts.f_table.resize(static_cast<std::size_t>(ma) * mb);
    luts.g_table.resize(static_cast<std::size_t>(ma) * mb * 2);
    for (int i = 0; i < ma; ++i)
        for (int j = 0; j < mb; ++j) {
            double a = da.values[i];
            double b = db.values[j];
            luts.f_table[static_cast<std::size_t>(i) * mb + j] =
                static_cast<std::uint16_t>(qf.cell_of(locate_exact(f_merged, f_fn(a, b))));
            for (int u = 0; u < 2; ++u)
                luts.g_table[(static_cast<std::size_t>(i) * mb + j) * 2 + u] =
                    static_cast<std::uint16_t>(qg.cell_of(locate_exact(g_merged, g_fn(a, b, u))));
        }
    return luts;
}

std::string node_path_name(int depth, int pos) {
    if (depth == 0) return "-";
    std::string path(depth, 'f');
    for (int d = 0; d < depth; ++d)
        if ((pos >> (depth - 1 - d)) & 1) path[d] = 'g';
    return path;
}

void rebuild_grid_to_cell(LutSet& luts) {
    if (luts.channel_quantizer.source_size() != luts.grid.levels)
        throw std::invalid_argument(
            "lut set: channel quantizer alphabet does not match the grid level count");
    luts.grid_to_cell.resize(luts.grid.levels);
    for (int i = 0; i < luts.grid.levels; ++i)
        luts.grid_to_cell[i] = luts.channel_quantizer.cell_of(i);
}

LutSet run_quantized_de(const DiscreteDistribution& channel_dist, int n_bits, int levels,
                        DeTrace* trace) {
    if (n_bits < 1) throw std::invalid_argument("run_quantized_de: n_bits must be >= 1");
    if (levels < 1) throw std::invalid_argument("run_quantized_de: levels must be >= 1");

    LutSet luts;
    luts.n_bits = n_bits;
    luts.code_len = 1 << n_bits;
    luts.levels = levels;

    const int total_nodes = (1 << (n_bits + 1)) - 1;
    luts.nodes.resize(total_nodes);
    std::vector<DiscreteDistribution> dists(total_nodes);
    if (trace) {
        trace->node_dist.resize(total_nodes);
        trace->exact_f.resize(total_nodes);
        trace->exact_g.resize(total_nodes);
    }

    luts.channel_quantizer =
        design_min_distortion_quantizer(channel_dist, std::min(levels, channel_dist.size()));
    dists[0] = apply_quantizer(channel_dist, luts.channel_quantizer);

    std::string deferred_error;
    for (int depth = 0; depth < n_bits; ++depth) {
        const int width = 1 << depth;
#pragma omp parallel for schedule(dynamic)
        for (int pos = 0; pos < width; ++pos) {
            try {
                const int idx = LutSet::node_index(depth, pos);
                const DiscreteDistribution& p = dists[idx];

                DiscreteDistribution f_out = f_output_distribution(p, p);
                DiscreteDistribution g_out = g_output_distribution(p, p);
                Quantizer qf =
                    design_min_distortion_quantizer(f_out, std::min(levels, f_out.size()));
                Quantizer qg =
                    design_min_distortion_quantizer(g_out, std::min(levels, g_out.size()));

                NodeLuts tables = build_node_luts(p, p, f_out, qf, g_out, qg);
                luts.nodes[idx].f_table = std::move(tables.f_table);
                luts.nodes[idx].g_table = std::move(tables.g_table);

                dists[LutSet::node_index(depth + 1, 2 * pos)] = apply_quantizer(f_out, qf);
                dists[LutSet::node_index(depth + 1, 2 * pos + 1)] = apply_quantizer(g_out, qg);
                if (trace) {
                    trace->exact_f[idx] = std::move(f_out);
                    trace->exact_g[idx] = std::move(g_out);
                }
            } catch (const std::exception& e) {
#pragma omp critical
                if (deferred_error.empty()) deferred_error = e.what();
            }
        }
        if (!deferred_error.empty()) throw std::runtime_error(deferred_error);
    }

    for (int idx = 0; idx < total_nodes; ++idx) {
        luts.nodes[idx].recon = dists[idx].values;
        if (trace) trace->node_dist[idx] = std::move(dists[idx]);
    }
    return luts;
}

LutSet build_lut_set(int code_len, int levels, double design_ebn0_db, double rate,
                     DeTrace* trace) {
    if (code_len < 2 || (code_len & (code_len - 1)) != 0)
        throw std::invalid_argument("build_lut_set: code_len must be a power of two >= 2");
    int n_bits = 0;
    while ((1 << n_bits) < code_len) ++n_bits;

    double sigma = ebn0_to_sigma(design_ebn0_db, rate);
    UniformGrid grid = design_uniform_grid(sigma, 128);
    DiscreteDistribution channel_dist = grid_distribution(sigma, grid);
    if (channel_dist.size() != grid.levels)
        throw std::invalid_argument("build_lut_set: design SNR leaves empty grid cells");

    LutSet luts = run_quantized_de(channel_dist, n_bits, levels, trace);
    luts.design_ebn0_db = design_ebn0_db;
    luts.grid = grid;
    rebuild_grid_to_cell(luts);
    return luts;
}

}  // namespace polarq
