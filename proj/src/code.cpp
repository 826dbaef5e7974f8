#include "polarq/code.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace polarq {

namespace {

bool is_power_of_two(int n) { return n >= 2 && (n & (n - 1)) == 0; }

void check_code_params(int code_len, int info_len) {
    if (!is_power_of_two(code_len))
        throw std::invalid_argument("code_len must be a power of two >= 2");
    if (info_len < 1 || info_len > code_len)
        throw std::invalid_argument("info_len must be in [1, code_len]");
}

}  // namespace

std::vector<int> construct_info_set(int code_len, int info_len) {
    check_code_params(code_len, info_len);

    const double beta = std::pow(2.0, 0.25);
    std::vector<double> weight(code_len, 0.0);
    for (int i = 0; i < code_len; ++i) {
        double scale = 1.0;
        for (int bits = i; bits != 0; bits >>= 1) {
            if (bits & 1) weight[i] += scale;
            scale *= beta;
        }
    }

    std::vector<int> order(code_len);
    std::iota(order.begin(), order.end(), 0);
    // Ties cannot occur for beta = 2^(1/4); larger index wins anyway so the
    // ordering is total.
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (weight[a] != weight[b]) return weight[a] > weight[b];
        return a > b;
    });

    std::vector<int> info(order.begin(), order.begin() + info_len);
    std::sort(info.begin(), info.end());
    return info;
}

CodeConfig make_code_config(int code_len, int info_len) {
    return make_code_config(code_len, construct_info_set(code_len, info_len));
}

CodeConfig make_code_config(int code_len, std::vector<int> info_set) {
    if (!is_power_of_two(code_len))
        throw std::invalid_argument("code_len must be a power of two >= 2");
    std::sort(info_set.begin(), info_set.end());
    if (info_set.empty() || static_cast<int>(info_set.size()) > code_len)
        throw std::invalid_argument("info_set size must be in [1, code_len]");
    if (std::adjacent_find(info_set.begin(), info_set.end()) != info_set.end())
        throw std::invalid_argument("info_set contains duplicates");
    if (info_set.front() < 0 || info_set.back() >= code_len)
        throw std::invalid_argument("info_set index out of range");

    CodeConfig config;
    config.code_len = code_len;
    config.info_len = static_cast<int>(info_set.size());
    config.n_bits = 0;
    while ((1 << config.n_bits) < code_len) ++config.n_bits;
    config.is_info.assign(code_len, 0);
    for (int i : info_set) config.is_info[i] = 1;
    config.info_set = std::move(info_set);
    return config;
}

void polar_transform(BitBlock& block) {
    const int n = static_cast<int>(block.size());
    for (int half = 1; half < n; half <<= 1)
        for (int base = 0; base < n; base += 2 * half)
            for (int j = 0; j < half; ++j) block[base + j] ^= block[base + j + half];
}

BitBlock encode(const CodeConfig& config, const BitBlock& info_bits) {
    if (static_cast<int>(info_bits.size()) != config.info_len)
        throw std::invalid_argument("encode: info_bits length != K");

    BitBlock u(config.code_len, CodeConfig::frozen_value);
    for (int i = 0; i < config.info_len; ++i) u[config.info_set[i]] = info_bits[i] & 1;
    polar_transform(u);
    return u;
}

}  // namespace polarq
