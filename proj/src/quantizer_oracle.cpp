#include "polarq/quantizer_oracle.hpp"

#include <limits>
#include <stdexcept>

namespace polarq {

namespace {

double cell_error(const DiscreteDistribution& dist, int first, int last, double* recon) {
    double mass = 0.0, weighted = 0.0;
    for (int i = first; i < last; ++i) {
        mass += dist.probs[i];
        weighted += dist.probs[i] * dist.values[i];
    }
    double t = weighted / mass;
    double d = 0.0;
    for (int i = first; i < last; ++i) {
        double e = dist.values[i] - t;
        d += e * e * dist.probs[i];
    }
    *recon = t;
    return d;
}

void enumerate(const DiscreteDistribution& dist, int cells, int next_boundary,
               std::vector<int>& bounds, double partial, Quantizer& best) {
    const int m = dist.size();
    int placed = static_cast<int>(bounds.size()) - 1;
    if (placed == cells - 1) {
        double recon;
        double total = partial + cell_error(dist, bounds.back(), m, &recon);
        if (total < best.distortion) {
            best.distortion = total;
            best.boundaries = bounds;
            best.boundaries.push_back(m);
        }
        return;
    }
    int remaining = cells - 1 - placed;
    for (int b = next_boundary; b <= m - remaining; ++b) {
        double recon;
        double d = cell_error(dist, bounds.back(), b, &recon);
        bounds.push_back(b);
        enumerate(dist, cells, b + 1, bounds, partial + d, best);
        bounds.pop_back();
    }
}

}  // namespace

Quantizer brute_force_quantizer(const DiscreteDistribution& dist, int cells) {
    const int m = dist.size();
    if (m > 16) throw std::invalid_argument("brute_force_quantizer: alphabet too large");
    if (cells < 1 || cells > m)
        throw std::invalid_argument("brute_force_quantizer: need 1 <= cells <= M");

    Quantizer best;
    best.distortion = std::numeric_limits<double>::infinity();
    std::vector<int> bounds{0};
    enumerate(dist, cells, 1, bounds, 0.0, best);

    best.recon.resize(cells);
    for (int k = 0; k < cells; ++k) {
        double recon;
        cell_error(dist, best.boundaries[k], best.boundaries[k + 1], &recon);
        best.recon[k] = recon;
    }
    return best;
}

}  // namespace polarq
