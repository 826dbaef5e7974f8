// Exhaustive reference quantizer used by the test suites. Enumerates every
// contiguous partition directly and computes distortions with plain loops, so
// it shares no code path with the dynamic-programming design.
#pragma once

#include "polarq/quantizer.hpp"

namespace polarq {

// Refuses alphabets larger than 16 symbols (the enumeration is exponential).
Quantizer brute_force_quantizer(const DiscreteDistribution& dist, int cells);

}  // namespace polarq
