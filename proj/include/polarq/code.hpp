// Polar code construction (beta-expansion) and nonsystematic encoding.
#pragma once

#include <cstdint>
#include <vector>

namespace polarq {

using BitBlock = std::vector<std::uint8_t>;

struct CodeConfig {
    int n_bits = 0;    // log2(N)
    int code_len = 0;  // N
    int info_len = 0;  // K
    std::vector<int> info_set;        // sorted ascending, size K
    std::vector<std::uint8_t> is_info;  // length N membership mask
    static constexpr std::uint8_t frozen_value = 0;
};

// The K most reliable bit indices under the beta-expansion weight
// w(i) = sum_j b_j * beta^j with beta = 2^(1/4), returned sorted ascending.
std::vector<int> construct_info_set(int code_len, int info_len);

// Config with the beta-expansion information set.
CodeConfig make_code_config(int code_len, int info_len);

// Config with an explicit information set (mainly for tests).
CodeConfig make_code_config(int code_len, std::vector<int> info_set);

// Scatters info bits into the information set, freezes the rest to 0 and
// applies the Kronecker-power butterfly x = u * F2^(x)n over GF(2). No
// bit-reversal permutation.
BitBlock encode(const CodeConfig& config, const BitBlock& info_bits);

// In-place butterfly on a full length-N block (self-inverse).
void polar_transform(BitBlock& block);

}  // namespace polarq
