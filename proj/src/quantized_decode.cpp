#include "polarq/quantized_decode.hpp"

#include <stdexcept>

#include "polarq/channel.hpp"
#include "polarq/detail/sc_list_engine.hpp"
#include "polarq/float_decode.hpp"

namespace polarq {

namespace {

struct LutOps {
    const LutSet* luts;
    using Message = std::uint16_t;

    Message f(Message a, Message b, int level, int node) const {
        const NodeTables& parent = luts->node(level - 1, node >> 1);
        return parent.f_table[static_cast<std::size_t>(a) * parent.recon.size() + b];
    }
    Message g(Message a, Message b, int u, int level, int node) const {
        const NodeTables& parent = luts->node(level - 1, node >> 1);
        return parent.g_table[(static_cast<std::size_t>(a) * parent.recon.size() + b) * 2 + u];
    }
    double leaf_value(Message m, int leaf) const {
        return luts->node(luts->n_bits, leaf).recon[m];
    }
};

struct UniformOps {
    const UniformScalarQuantizer* quantizer;
    using Message = double;

    Message f(Message a, Message b, int, int) const { return quantizer->quantize(f_fn(a, b)); }
    Message g(Message a, Message b, int u, int, int) const {
        return quantizer->quantize(g_fn(a, b, u));
    }
    double leaf_value(Message m, int) const { return m; }
};

void check_frame(const CodeConfig& config, const QuantizedFrame& frame, const LutSet& luts) {
    if (config.code_len != luts.code_len)
        throw std::invalid_argument("quantized decode: config N does not match lut set depth");
    if (static_cast<int>(frame.indices.size()) != config.code_len)
        throw std::invalid_argument("quantized decode: frame length != N");
    const std::size_t root_size = luts.nodes[0].recon.size();
    for (auto idx : frame.indices)
        if (idx >= root_size)
            throw std::invalid_argument("quantized decode: frame index outside root alphabet");
}

}  // namespace

QuantizedFrame quantize_channel_llrs(const std::vector<double>& llrs, const LutSet& luts) {
    QuantizedFrame frame;
    frame.indices.reserve(llrs.size());
    for (double llr : llrs) {
        int grid_index = quantize_to_grid(llr, luts.grid);
        frame.indices.push_back(static_cast<std::uint16_t>(luts.grid_to_cell[grid_index]));
    }
    return frame;
}

BitBlock qsc_decode(const CodeConfig& config, const QuantizedFrame& frame, const LutSet& luts) {
    check_frame(config, frame, luts);
    return detail::sc_decode_with(config, LutOps{&luts}, frame.indices);
}

BitBlock qscl_decode(const CodeConfig& config, const QuantizedFrame& frame, const LutSet& luts,
                     int list_size) {
    check_frame(config, frame, luts);
    detail::ListDecoder<LutOps> decoder(config, LutOps{&luts}, list_size);
    return decoder.decode(frame.indices);
}

BitBlock uniform_baseline_decode(const CodeConfig& config, const std::vector<double>& llrs,
                                 const UniformScalarQuantizer& quantizer, int list_size) {
    std::vector<double> quantized(llrs.size());
    for (std::size_t j = 0; j < llrs.size(); ++j) quantized[j] = quantizer.quantize(llrs[j]);
    if (list_size == 1) return detail::sc_decode_with(config, UniformOps{&quantizer}, quantized);
    detail::ListDecoder<UniformOps> decoder(config, UniformOps{&quantizer}, list_size);
    return decoder.decode(quantized);
}

BitBlock uniform_baseline_decode(const CodeConfig& config, const std::vector<double>& llrs,
                                 int bits, double design_sigma, int list_size) {
    if (bits < 2 || bits > 8)
        throw std::invalid_argument("uniform_baseline_decode: bits out of [2, 8]");
    UniformGrid grid = design_uniform_grid(design_sigma, 128);
    DiscreteDistribution dist = grid_distribution(design_sigma, grid);
    UniformScalarQuantizer q = design_uniform_scalar_quantizer(dist, 1 << bits);
    return uniform_baseline_decode(config, llrs, q, list_size);
}

}  // namespace polarq
