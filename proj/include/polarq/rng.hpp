// Counter-based random number generation (Philox4x32-10).
//
// Every Monte-Carlo frame gets its own statistically independent substream
// keyed by (seed, frame index), so frames can be generated in any order --
// serial and parallel simulation runs draw identical randomness.
#pragma once

#include <array>
#include <cstdint>

namespace polarq {

// One 10-round Philox4x32 block: 128 bits of output per (counter, key) pair.
std::array<std::uint32_t, 4> philox4x32(const std::array<std::uint32_t, 4>& counter,
                                        const std::array<std::uint32_t, 2>& key);

// Stream of uniforms/normals for a single frame. Cheap to construct; holds
// only the counter position and a small output buffer.
class FrameRng {
public:
    FrameRng(std::uint64_t seed, std::uint64_t frame_index);

    std::uint32_t next_u32();
    int next_bit() { return static_cast<int>(next_u32() >> 31); }

    // Uniform on [0, 1), 53-bit resolution.
    double next_double();

    // Standard normal via Box-Muller; second value of each pair is cached.
    double next_normal();

private:
    void refill();

    std::array<std::uint32_t, 2> key_;
    std::array<std::uint32_t, 4> counter_;
    std::array<std::uint32_t, 4> buffer_{};
    int buffer_pos_ = 4;
    double cached_normal_ = 0.0;
    bool has_cached_normal_ = false;
};

}  // namespace polarq
