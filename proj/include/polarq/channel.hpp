// BPSK over AWGN, LLR conversion and the 128-level uniform front-end grid
// for channel LLRs.
#pragma once

#include <vector>

#include "polarq/code.hpp"
#include "polarq/distribution.hpp"
#include "polarq/rng.hpp"

namespace polarq {

struct ChannelParams {
    double sigma = 1.0;
    double ebn0_db = 0.0;
    double rate = 0.5;
};

// Symmetric uniform grid over [lo, lo + levels*step); lo = -levels*step/2.
struct UniformGrid {
    int levels = 0;
    double lo = 0.0;
    double step = 0.0;

    double midpoint(int index) const { return (2.0 * index - (levels - 1)) * (0.5 * step); }
};

// sigma = sqrt(1 / (2 * R * 10^(ebn0_db/10))) for BPSK.
double ebn0_to_sigma(double ebn0_db, double rate);

ChannelParams make_channel_params(double ebn0_db, double rate);

// BPSK map 0 -> +1, 1 -> -1, then additive Gaussian noise.
std::vector<double> transmit(const BitBlock& codeword, double sigma, FrameRng& rng);

// m = 2y / sigma^2; positive LLR favors bit 0.
double llr_convert(double y, double sigma);

// Grid spanning +-(2/sigma^2 + 8/sigma): the LLR mode mean plus four mode
// standard deviations.
UniformGrid design_uniform_grid(double sigma, int levels);

// Saturating cell index of an LLR on the grid.
int quantize_to_grid(double llr, const UniformGrid& grid);

// Exact distribution of the grid index under equiprobable BPSK inputs: cell
// representative = midpoint, probability = bimodal Gaussian mass with the
// out-of-range tails folded into the edge cells.
DiscreteDistribution grid_distribution(double sigma, const UniformGrid& grid);

}  // namespace polarq
