#include "polarq/distribution.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace polarq {

double DiscreteDistribution::total_mass() const {
    return std::accumulate(probs.begin(), probs.end(), 0.0);
}

DiscreteDistribution merge_duplicates(std::vector<double> values, std::vector<double> probs) {
    if (values.size() != probs.size())
        throw std::invalid_argument("merge_duplicates: values/probs length mismatch");
    if (values.empty()) throw std::invalid_argument("merge_duplicates: empty input");

    std::vector<int> order(values.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return values[a] < values[b]; });

    DiscreteDistribution out;
    out.values.reserve(values.size());
    out.probs.reserve(values.size());
    for (int idx : order) {
        double v = values[idx];
        double p = probs[idx];
        if (p < 0.0) throw std::invalid_argument("merge_duplicates: negative probability");
        if (!out.values.empty() && out.values.back() == v) {
            out.probs.back() += p;
        } else {
            out.values.push_back(v);
            out.probs.push_back(p);
        }
    }

    // Drop zero-mass symbols; they carry no distortion and would break
    // centroid computations downstream.
    int kept = 0;
    for (int i = 0; i < out.size(); ++i) {
        if (out.probs[i] > 0.0) {
            out.values[kept] = out.values[i];
            out.probs[kept] = out.probs[i];
            ++kept;
        }
    }
    out.values.resize(kept);
    out.probs.resize(kept);

    if (out.values.empty()) throw std::invalid_argument("merge_duplicates: zero total mass");
    return out;
}

}  // namespace polarq
