#include "polarq/float_decode.hpp"

#include <cmath>

#include "polarq/detail/sc_list_engine.hpp"

namespace polarq {

double f_fn(double a, double b) {
    double m = std::min(std::abs(a), std::abs(b));
    bool negative = (a < 0.0) != (b < 0.0);
    double r = negative ? -m : m;
    return r == 0.0 ? 0.0 : r;  // never hand out -0.0
}

double g_fn(double a, double b, int u) { return u ? b - a : a + b; }

int hard_decision(double alpha, bool is_frozen) {
    if (is_frozen) return 0;
    return alpha >= 0.0 ? 0 : 1;
}

double pm_update(double pm, double alpha, int u_hat) {
    int preferred = alpha >= 0.0 ? 0 : 1;
    return u_hat == preferred ? pm : pm + std::abs(alpha);
}

namespace {

struct FloatOps {
    using Message = double;
    Message f(Message a, Message b, int, int) const { return f_fn(a, b); }
    Message g(Message a, Message b, int u, int, int) const { return g_fn(a, b, u); }
    double leaf_value(Message m, int) const { return m; }
};

}  // namespace

BitBlock sc_decode(const CodeConfig& config, const std::vector<double>& llrs) {
    return detail::sc_decode_with(config, FloatOps{}, llrs);
}

BitBlock scl_decode(const CodeConfig& config, const std::vector<double>& llrs, int list_size) {
    detail::ListDecoder<FloatOps> decoder(config, FloatOps{}, list_size);
    return decoder.decode(llrs);
}

}  // namespace polarq
