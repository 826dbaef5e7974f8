// Monte-Carlo BLER/BER harness. Frames are keyed by index into per-frame RNG
// substreams, so the OpenMP-parallel runner and the serial reference produce
// identical statistics for the same configuration.
#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "polarq/density_evolution.hpp"
#include "polarq/errors.hpp"

namespace polarq {

enum class DecoderKind { FloatSc, FloatScl, QSc, QScl, USc, UScl };

DecoderKind parse_decoder_kind(const std::string& name);
std::string decoder_kind_name(DecoderKind kind);
bool decoder_uses_tables(DecoderKind kind);

struct SimConfig {
    int code_len = 256;
    int info_len = 128;
    DecoderKind decoder = DecoderKind::FloatSc;
    int list_size = 8;
    int quant_bits = 5;  // levels = 2^bits
    double design_ebn0_db = 0.0;
    double ebn0_start = 0.0;
    double ebn0_stop = 0.0;
    double ebn0_step = 0.25;
    long max_frames = 1000000;
    long target_block_errors = 100;
    std::uint64_t seed = 1;
    std::string tables_path;  // optional on-disk cache for q-* decoders
    std::string out_path;     // optional CSV destination
    bool parallel = true;
};

struct BlerPoint {
    double ebn0_db = 0.0;
    long frames = 0;
    long block_errors = 0;
    long long bit_errors = 0;
    double bler = 0.0;
    double ber = 0.0;
    double elapsed_seconds = 0.0;
};

void validate(const SimConfig& cfg);

// Sweep values [ebn0_start, ebn0_stop] in ebn0_step increments.
std::vector<double> sweep_points(const SimConfig& cfg);

// Loads cfg.tables_path if present (validating that it matches the
// configuration key N/levels/design), otherwise builds the tables and, when a
// path is configured, writes the cache.
LutSet load_or_build_tables(const SimConfig& cfg);

// Runs frames 0, 1, 2, ... until target_block_errors block errors have been
// scanned in frame order or max_frames is reached. `tables` must be present
// exactly for the q-* decoders.
BlerPoint run_bler_point(const SimConfig& cfg, double ebn0_db, const LutSet* tables);

// One run_bler_point per sweep value; builds/loads tables once. Writes CSV to
// cfg.out_path when set.
std::vector<BlerPoint> run_sweep(const SimConfig& cfg);

extern const char* const kCsvHeader;  // "ebn0_db,frames,block_errors,bit_errors,bler,ber"
void write_csv_row(std::ostream& out, const BlerPoint& point);
void write_csv(std::ostream& out, const std::vector<BlerPoint>& points);

}  // namespace polarq
