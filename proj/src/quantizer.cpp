#include "polarq/quantizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace polarq {

namespace {

void check_range(const DiscreteDistribution& dist, int first, int last) {
    if (first < 0 || last > dist.size() || first >= last)
        throw std::invalid_argument("quantizer: bad symbol range");
}

// Prefix sums of p, p*l and p*l^2; cell statistics then cost O(1).
struct PrefixMoments {
    std::vector<double> p0, p1, p2;

    explicit PrefixMoments(const DiscreteDistribution& dist) {
        int m = dist.size();
        p0.assign(m + 1, 0.0);
        p1.assign(m + 1, 0.0);
        p2.assign(m + 1, 0.0);
        for (int i = 0; i < m; ++i) {
            double p = dist.probs[i];
            double v = dist.values[i];
            p0[i + 1] = p0[i] + p;
            p1[i + 1] = p1[i] + p * v;
            p2[i + 1] = p2[i] + p * v * v;
        }
    }

    double mass(int first, int last) const { return p0[last] - p0[first]; }
    double mean(int first, int last) const { return (p1[last] - p1[first]) / mass(first, last); }
    // sum p*l^2 - (sum p*l)^2 / sum p, clamped against tiny negative rounding.
    double cost(int first, int last) const {
        double m0 = mass(first, last);
        double m1 = p1[last] - p1[first];
        double m2 = p2[last] - p2[first];
        return std::max(0.0, m2 - m1 * m1 / m0);
    }
};

}  // namespace

int Quantizer::cell_of(int source_index) const {
    auto it = std::upper_bound(boundaries.begin(), boundaries.end(), source_index);
    return static_cast<int>(it - boundaries.begin()) - 1;
}

double centroid(const DiscreteDistribution& dist, int first, int last) {
    check_range(dist, first, last);
    double mass = 0.0, weighted = 0.0;
    for (int i = first; i < last; ++i) {
        mass += dist.probs[i];
        weighted += dist.probs[i] * dist.values[i];
    }
    if (mass <= 0.0) throw std::invalid_argument("centroid: zero mass range");
    return weighted / mass;
}

double partial_distortion(const DiscreteDistribution& dist, int first, int last) {
    double t = centroid(dist, first, last);
    double d = 0.0;
    for (int i = first; i < last; ++i) {
        double e = dist.values[i] - t;
        d += e * e * dist.probs[i];
    }
    return d;
}

Quantizer design_min_distortion_quantizer(const DiscreteDistribution& dist, int cells) {
    const int m = dist.size();
    if (cells < 1 || cells > m)
        throw std::invalid_argument("design_min_distortion_quantizer: need 1 <= cells <= M");

    PrefixMoments moments(dist);
    const int slack = m - cells;  // widest cell covers slack+1 symbols
    const double inf = std::numeric_limits<double>::infinity();

    // state[k][a]: optimal distortion of quantizing symbols [0, a) into k
    // cells; valid for a in [k, k + slack]. trace[k][a] is the argmin
    // predecessor boundary.
    std::vector<std::vector<double>> state(cells + 1, std::vector<double>(m + 1, inf));
    std::vector<std::vector<int>> trace(cells + 1, std::vector<int>(m + 1, -1));
    state[0][0] = 0.0;

    for (int k = 1; k <= cells; ++k) {
        for (int a = k; a <= k + slack; ++a) {
            double best = inf;
            int best_prev = -1;
            int lo = std::max(k - 1, a - (slack + 1));
            int hi = std::min(a - 1, (k - 1) + slack);
            for (int prev = lo; prev <= hi; ++prev) {
                double cand = state[k - 1][prev] + moments.cost(prev, a);
                if (cand < best) {
                    best = cand;
                    best_prev = prev;
                }
            }
            state[k][a] = best;
            trace[k][a] = best_prev;
        }
    }

    Quantizer q;
    q.boundaries.assign(cells + 1, 0);
    q.boundaries[cells] = m;
    for (int k = cells; k > 1; --k) q.boundaries[k - 1] = trace[k][q.boundaries[k]];
    q.distortion = state[cells][m];
    q.recon.resize(cells);
    for (int k = 0; k < cells; ++k)
        q.recon[k] = moments.mean(q.boundaries[k], q.boundaries[k + 1]);
    return q;
}

DiscreteDistribution apply_quantizer(const DiscreteDistribution& dist, const Quantizer& q) {
    if (q.source_size() != dist.size())
        throw std::invalid_argument("apply_quantizer: quantizer was designed for another alphabet");
    DiscreteDistribution out;
    out.values = q.recon;
    out.probs.assign(q.cells(), 0.0);
    for (int k = 0; k < q.cells(); ++k)
        for (int i = q.boundaries[k]; i < q.boundaries[k + 1]; ++i) out.probs[k] += dist.probs[i];
    return out;
}

int UniformScalarQuantizer::index_of(double value) const {
    double idx = std::floor(value / step + levels * 0.5);
    if (idx < 0.0) return 0;
    if (idx >= levels) return levels - 1;
    return static_cast<int>(idx);
}

namespace {

// Distortion of the symmetric uniform quantizer with the given step, using
// per-cell centroids as reconstruction values.
double uniform_step_distortion(const DiscreteDistribution& dist, int levels, double step) {
    UniformScalarQuantizer q{levels, step, {}};
    std::vector<double> m0(levels, 0.0), m1(levels, 0.0), m2(levels, 0.0);
    for (int i = 0; i < dist.size(); ++i) {
        int c = q.index_of(dist.values[i]);
        double p = dist.probs[i];
        double v = dist.values[i];
        m0[c] += p;
        m1[c] += p * v;
        m2[c] += p * v * v;
    }
    double d = 0.0;
    for (int c = 0; c < levels; ++c)
        if (m0[c] > 0.0) d += std::max(0.0, m2[c] - m1[c] * m1[c] / m0[c]);
    return d;
}

}  // namespace

UniformScalarQuantizer design_uniform_scalar_quantizer(const DiscreteDistribution& dist,
                                                       int levels) {
    if (levels < 2) throw std::invalid_argument("design_uniform_scalar_quantizer: levels < 2");

    double vmax = std::max(std::abs(dist.values.front()), std::abs(dist.values.back()));
    if (vmax == 0.0) vmax = 1.0;
    double step_hi = 2.2 * vmax / std::max(1, levels / 2 - 1);
    const int scan_steps = 4096;

    double best_step = step_hi / scan_steps;
    double best_d = std::numeric_limits<double>::infinity();
    for (int j = 1; j <= scan_steps; ++j) {
        double step = step_hi * j / scan_steps;
        double d = uniform_step_distortion(dist, levels, step);
        if (d < best_d) {
            best_d = d;
            best_step = step;
        }
    }

    UniformScalarQuantizer q{levels, best_step, {}};
    std::vector<double> m0(levels, 0.0), m1(levels, 0.0);
    for (int i = 0; i < dist.size(); ++i) {
        int c = q.index_of(dist.values[i]);
        m0[c] += dist.probs[i];
        m1[c] += dist.probs[i] * dist.values[i];
    }
    q.recon.resize(levels);
    for (int c = 0; c < levels; ++c) {
        if (m0[c] > 0.0)
            q.recon[c] = m1[c] / m0[c];
        else
            q.recon[c] = (c - levels / 2 + 0.5) * best_step;
    }
    return q;
}

Quantizer design_uniform_quantizer(const DiscreteDistribution& dist, int levels) {
    UniformScalarQuantizer uq = design_uniform_scalar_quantizer(dist, levels);

    // Regroup source symbols by uniform cell; the value -> index map is
    // monotone, so occupied cells form contiguous index ranges.
    Quantizer q;
    q.boundaries.push_back(0);
    int i = 0;
    const int m = dist.size();
    while (i < m) {
        int cell = uq.index_of(dist.values[i]);
        int j = i;
        while (j < m && uq.index_of(dist.values[j]) == cell) ++j;
        q.boundaries.push_back(j);
        q.recon.push_back(centroid(dist, i, j));
        q.distortion += partial_distortion(dist, i, j);
        i = j;
    }
    return q;
}

}  // namespace polarq
