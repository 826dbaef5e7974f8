#include "polarq/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace polarq {

double ebn0_to_sigma(double ebn0_db, double rate) {
    if (rate <= 0.0 || rate > 1.0) throw std::invalid_argument("ebn0_to_sigma: rate out of (0,1]");
    double ebn0 = std::pow(10.0, ebn0_db / 10.0);
    return std::sqrt(1.0 / (2.0 * rate * ebn0));
}

ChannelParams make_channel_params(double ebn0_db, double rate) {
    return ChannelParams{ebn0_to_sigma(ebn0_db, rate), ebn0_db, rate};
}

std::vector<double> transmit(const BitBlock& codeword, double sigma, FrameRng& rng) {
    std::vector<double> received(codeword.size());
    for (std::size_t j = 0; j < codeword.size(); ++j) {
        double symbol = codeword[j] ? -1.0 : 1.0;
        received[j] = symbol + sigma * rng.next_normal();
    }
    return received;
}

double llr_convert(double y, double sigma) {
    if (sigma <= 0.0) throw std::invalid_argument("llr_convert: sigma must be positive");
    return 2.0 * y / (sigma * sigma);
}

UniformGrid design_uniform_grid(double sigma, int levels) {
    if (levels < 2) throw std::invalid_argument("design_uniform_grid: levels < 2");
    if (sigma <= 0.0) throw std::invalid_argument("design_uniform_grid: sigma must be positive");
    double mode_mean = 2.0 / (sigma * sigma);
    double mode_sd = 2.0 / sigma;
    double range = mode_mean + 4.0 * mode_sd;
    UniformGrid grid;
    grid.levels = levels;
    grid.step = 2.0 * range / levels;
    grid.lo = -range;
    return grid;
}

int quantize_to_grid(double llr, const UniformGrid& grid) {
    double idx = std::floor((llr - grid.lo) / grid.step);
    if (idx < 0.0) return 0;
    if (idx >= grid.levels) return grid.levels - 1;
    return static_cast<int>(idx);
}

DiscreteDistribution grid_distribution(double sigma, const UniformGrid& grid) {
    const int levels = grid.levels;
    const double mode_mean = 2.0 / (sigma * sigma);
    const double mode_sd = 2.0 / sigma;
    const double inv = 1.0 / (mode_sd * std::sqrt(2.0));

    // Upper-tail mass of each mode beyond the cell boundaries; adjacent cells
    // share boundary evaluations so the total telescopes to 1 exactly.
    std::vector<double> tail_pos(levels + 1), tail_neg(levels + 1);
    tail_pos[0] = 2.0;  // erfc(-inf)
    tail_neg[0] = 2.0;
    tail_pos[levels] = 0.0;
    tail_neg[levels] = 0.0;
    for (int i = 1; i < levels; ++i) {
        double boundary = grid.lo + i * grid.step;
        tail_pos[i] = std::erfc((boundary - mode_mean) * inv);
        tail_neg[i] = std::erfc((boundary + mode_mean) * inv);
    }

    std::vector<double> values(levels), probs(levels);
    for (int i = 0; i < levels; ++i) {
        values[i] = grid.midpoint(i);
        probs[i] = 0.25 * ((tail_pos[i] - tail_pos[i + 1]) + (tail_neg[i] - tail_neg[i + 1]));
    }
    // The bimodal mixture is symmetric; mirroring makes the stored
    // probabilities exactly so instead of matching only to rounding error.
    for (int i = 0; i < levels / 2; ++i) {
        double p = 0.5 * (probs[i] + probs[levels - 1 - i]);
        probs[i] = p;
        probs[levels - 1 - i] = p;
    }
    return merge_duplicates(std::move(values), std::move(probs));
}

}  // namespace polarq
