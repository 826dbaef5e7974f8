// Minimum-distortion scalar quantizer design for discrete distributions,
// plus the symmetric uniform-step baseline.
#pragma once

#include <vector>

#include "polarq/distribution.hpp"

namespace polarq {

// K-cell quantizer of an M-symbol distribution. Cell k (0-based) covers the
// contiguous source-index range [boundaries[k], boundaries[k+1]) and is
// represented by recon[k]; boundaries[0] == 0 and boundaries[K] == M.
struct Quantizer {
    std::vector<int> boundaries;
    std::vector<double> recon;
    double distortion = 0.0;

    int cells() const { return static_cast<int>(recon.size()); }
    int source_size() const { return boundaries.empty() ? 0 : boundaries.back(); }
    // Cell index for a source symbol index.
    int cell_of(int source_index) const;
};

// Probability-weighted mean of dist.values over [first, last).
double centroid(const DiscreteDistribution& dist, int first, int last);

// Minimum squared error of one cell covering [first, last), i.e. the error
// against the cell centroid.
double partial_distortion(const DiscreteDistribution& dist, int first, int last);

// Globally optimal K-cell quantizer by dynamic programming over contiguous
// partitions. Deterministic: forward-pass ties pick the smallest predecessor
// boundary. Throws std::invalid_argument for K < 1 or K > dist.size().
Quantizer design_min_distortion_quantizer(const DiscreteDistribution& dist, int cells);

// Distribution of the quantizer output: values are the reconstruction levels,
// probabilities the per-cell mass sums.
DiscreteDistribution apply_quantizer(const DiscreteDistribution& dist, const Quantizer& q);

// Symmetric equal-width quantizer in value space. Thresholds sit at integer
// multiples of `step` around 0 and the outer cells saturate. Reconstruction
// levels are conditional centroids of the design distribution where a cell
// has mass, geometric cell centers otherwise.
struct UniformScalarQuantizer {
    int levels = 0;
    double step = 0.0;
    std::vector<double> recon;

    int index_of(double value) const;
    double quantize(double value) const { return recon[index_of(value)]; }
};

// Picks the step minimizing mean squared error over a dense 1-D scan.
UniformScalarQuantizer design_uniform_scalar_quantizer(const DiscreteDistribution& dist,
                                                       int levels);

// The uniform baseline expressed over source-index ranges, comparable
// one-to-one with design_min_distortion_quantizer (empty cells are dropped).
Quantizer design_uniform_quantizer(const DiscreteDistribution& dist, int levels);

}  // namespace polarq
