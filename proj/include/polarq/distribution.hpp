#pragma once

#include <vector>

namespace polarq {

// Discrete distribution over real representative values, kept strictly
// ascending with positive probabilities. Instances are normally produced by
// merge_duplicates() which establishes the ordering invariants.
struct DiscreteDistribution {
    std::vector<double> values;
    std::vector<double> probs;

    int size() const { return static_cast<int>(values.size()); }
    double total_mass() const;
};

// Sorts value/probability pairs, merges exactly-equal values by summing their
// probabilities and drops zero-probability entries. Throws
// std::invalid_argument on empty input, negative probabilities or zero total
// mass.
DiscreteDistribution merge_duplicates(std::vector<double> values, std::vector<double> probs);

}  // namespace polarq
