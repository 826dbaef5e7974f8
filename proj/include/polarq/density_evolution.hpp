// Quantized density evolution over the polar recursion tree: exact f/g output
// distributions, per-node minimum-distortion compression, and the lookup
// tables the integer decoder runs on.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "polarq/channel.hpp"
#include "polarq/distribution.hpp"
#include "polarq/quantizer.hpp"

namespace polarq {

// Exact distribution of f(a, b) for independent a ~ da, b ~ db.
DiscreteDistribution f_output_distribution(const DiscreteDistribution& da,
                                           const DiscreteDistribution& db);

// Exact distribution of g(a, b, u) for independent a ~ da, b ~ db and
// equiprobable u.
DiscreteDistribution g_output_distribution(const DiscreteDistribution& da,
                                           const DiscreteDistribution& db);

struct NodeLuts {
    std::vector<std::uint16_t> f_table;  // [i * |db| + j]
    std::vector<std::uint16_t> g_table;  // [(i * |db| + j) * 2 + u]
};

// Tables mapping sibling index pairs to compressed child indices. f_merged /
// g_merged are the exact output distributions the quantizers were designed
// on; every f/g evaluation must hit one of their values exactly.
NodeLuts build_node_luts(const DiscreteDistribution& da, const DiscreteDistribution& db,
                         const DiscreteDistribution& f_merged, const Quantizer& qf,
                         const DiscreteDistribution& g_merged, const Quantizer& qg);

struct NodeTables {
    std::vector<double> recon;           // node alphabet, strictly ascending
    std::vector<std::uint16_t> f_table;  // empty at leaf depth
    std::vector<std::uint16_t> g_table;
};

// Complete decoder table set for one code length. Nodes are stored in heap
// order: node (depth, pos) at index 2^depth - 1 + pos; the f-child of
// (d, t) is (d+1, 2t), the g-child (d+1, 2t+1). Carries no information set:
// one table set serves every code rate of the same length.
struct LutSet {
    int code_len = 0;
    int n_bits = 0;
    int levels = 0;  // compression level K
    double design_ebn0_db = 0.0;
    UniformGrid grid;
    Quantizer channel_quantizer;
    std::vector<int> grid_to_cell;  // grid index -> root alphabet index
    std::vector<NodeTables> nodes;

    static int node_index(int depth, int pos) { return (1 << depth) - 1 + pos; }
    const NodeTables& node(int depth, int pos) const { return nodes[node_index(depth, pos)]; }
    NodeTables& node(int depth, int pos) { return nodes[node_index(depth, pos)]; }
};

// Node path over {f, g} from the root, e.g. "fg"; the root is "-".
std::string node_path_name(int depth, int pos);

// Per-node distributions kept around for diagnostics and tests (they are not
// part of the serialized table format).
struct DeTrace {
    std::vector<DiscreteDistribution> node_dist;  // heap order, compressed
    std::vector<DiscreteDistribution> exact_f;    // internal nodes only
    std::vector<DiscreteDistribution> exact_g;
};

// Runs quantized density evolution for code length 2^n_bits: compresses the
// channel distribution to `levels` symbols, then per internal node compresses
// the exact f/g output distributions and records the lookup tables. A node
// whose alphabet does not exceed `levels` keeps the identity quantizer.
// grid/design_ebn0_db metadata on the result are left to the caller.
LutSet run_quantized_de(const DiscreteDistribution& channel_dist, int n_bits, int levels,
                        DeTrace* trace = nullptr);

// One-stop builder: designs the 128-level grid at the design SNR, computes
// the exact channel-LLR distribution and runs density evolution. `rate` only
// fixes the design-point noise level; the tables stay rate independent.
LutSet build_lut_set(int code_len, int levels, double design_ebn0_db, double rate,
                     DeTrace* trace = nullptr);

// Rebuilds the grid index -> root cell map from the channel quantizer;
// requires the quantizer alphabet to cover every grid level.
void rebuild_grid_to_cell(LutSet& luts);

}  // namespace polarq
