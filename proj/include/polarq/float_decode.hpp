// Float-point successive cancellation and list decoding.
#pragma once

#include <vector>

#include "polarq/code.hpp"

namespace polarq {

// Min-sum check-node update: sign(a)*sign(b)*min(|a|,|b|), sign(0) = +1.
double f_fn(double a, double b);

// Variable-node update with partial sum u: (-1)^u * a + b.
double g_fn(double a, double b, int u);

// Frozen positions decode to 0, otherwise 0 iff alpha >= 0.
int hard_decision(double alpha, bool is_frozen);

// Path-metric update: adds |alpha| when the decision contradicts the LLR
// sign (sgn(0) = +1).
double pm_update(double pm, double alpha, int u_hat);

BitBlock sc_decode(const CodeConfig& config, const std::vector<double>& llrs);

BitBlock scl_decode(const CodeConfig& config, const std::vector<double>& llrs, int list_size);

}  // namespace polarq
