// Compares the serial reference against the OpenMP frame loop, and times
// density-evolution table construction.
#include <chrono>
#include <cstdio>

#include "polarq/simulation.hpp"

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void bench_point(const char* label, polarq::SimConfig cfg, const polarq::LutSet* tables) {
    cfg.parallel = false;
    auto t0 = std::chrono::steady_clock::now();
    polarq::BlerPoint serial = polarq::run_bler_point(cfg, 2.0, tables);
    double serial_s = seconds_since(t0);

    cfg.parallel = true;
    t0 = std::chrono::steady_clock::now();
    polarq::BlerPoint parallel = polarq::run_bler_point(cfg, 2.0, tables);
    double parallel_s = seconds_since(t0);

    bool identical = serial.frames == parallel.frames &&
                     serial.block_errors == parallel.block_errors &&
                     serial.bit_errors == parallel.bit_errors;
    std::printf("%-24s serial %8.0f frames/s   omp %8.0f frames/s   speedup %.2fx   %s\n", label,
                serial.frames / serial_s, parallel.frames / parallel_s, serial_s / parallel_s,
                identical ? "results identical" : "RESULT MISMATCH");
}

}  // namespace

int main() {
    polarq::SimConfig cfg;
    cfg.code_len = 256;
    cfg.info_len = 128;
    cfg.max_frames = 2000;
    cfg.target_block_errors = 1 << 30;  // fixed frame count for timing
    cfg.seed = 7;

    auto t0 = std::chrono::steady_clock::now();
    polarq::LutSet tables = polarq::build_lut_set(256, 32, 0.0, 0.5);
    std::printf("%-24s %.2f s\n", "table build P(256) 5-bit", seconds_since(t0));

    cfg.decoder = polarq::DecoderKind::FloatSc;
    bench_point("float-sc P(256,128)", cfg, nullptr);

    cfg.decoder = polarq::DecoderKind::FloatScl;
    cfg.list_size = 8;
    cfg.max_frames = 500;
    bench_point("float-scl-8 P(256,128)", cfg, nullptr);

    cfg.decoder = polarq::DecoderKind::QSc;
    cfg.max_frames = 2000;
    bench_point("q-sc 5-bit P(256,128)", cfg, &tables);

    cfg.decoder = polarq::DecoderKind::QScl;
    cfg.max_frames = 500;
    bench_point("q-scl-8 5-bit P(256,128)", cfg, &tables);

    return 0;
}
