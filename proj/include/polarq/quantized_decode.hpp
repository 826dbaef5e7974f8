// Integer-index SC/SCL decoding on precomputed lookup tables, and the
// uniform-quantized baseline decoder.
#pragma once

#include <cstdint>
#include <vector>

#include "polarq/code.hpp"
#include "polarq/density_evolution.hpp"
#include "polarq/quantizer.hpp"

namespace polarq {

// Channel LLR level indices into the root alphabet of a LutSet.
struct QuantizedFrame {
    std::vector<std::uint16_t> indices;
};

// Two-stage front end: uniform grid index, then channel-quantizer cell.
QuantizedFrame quantize_channel_llrs(const std::vector<double>& llrs, const LutSet& luts);

// SC where every f/g is a table lookup on the node-path-matched tables; leaf
// decisions read the reconstruction value of the arriving index.
BitBlock qsc_decode(const CodeConfig& config, const QuantizedFrame& frame, const LutSet& luts);

// List variant; path metrics accumulate |reconstruction| at the leaves.
BitBlock qscl_decode(const CodeConfig& config, const QuantizedFrame& frame, const LutSet& luts,
                     int list_size);

// Baseline: channel LLRs through the symmetric uniform quantizer, f/g
// computed on reconstruction values in reals, every output re-quantized onto
// the same grid with saturation. list_size 1 runs plain SC.
BitBlock uniform_baseline_decode(const CodeConfig& config, const std::vector<double>& llrs,
                                 const UniformScalarQuantizer& quantizer, int list_size);

// Convenience overload designing the quantizer from the 128-level grid
// distribution at the given design noise level (expensive; simulation loops
// should design once and reuse).
BitBlock uniform_baseline_decode(const CodeConfig& config, const std::vector<double>& llrs,
                                 int bits, double design_sigma, int list_size);

}  // namespace polarq
