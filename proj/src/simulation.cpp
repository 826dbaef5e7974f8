#include "polarq/simulation.hpp"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "polarq/channel.hpp"
#include "polarq/float_decode.hpp"
#include "polarq/lut_io.hpp"
#include "polarq/quantized_decode.hpp"
#include "polarq/rng.hpp"

namespace polarq {

DecoderKind parse_decoder_kind(const std::string& name) {
    if (name == "float-sc") return DecoderKind::FloatSc;
    if (name == "float-scl") return DecoderKind::FloatScl;
    if (name == "q-sc") return DecoderKind::QSc;
    if (name == "q-scl") return DecoderKind::QScl;
    if (name == "u-sc") return DecoderKind::USc;
    if (name == "u-scl") return DecoderKind::UScl;
    throw config_error("unknown decoder '" + name +
                       "' (expected float-sc, float-scl, q-sc, q-scl, u-sc or u-scl)");
}

std::string decoder_kind_name(DecoderKind kind) {
    switch (kind) {
        case DecoderKind::FloatSc: return "float-sc";
        case DecoderKind::FloatScl: return "float-scl";
        case DecoderKind::QSc: return "q-sc";
        case DecoderKind::QScl: return "q-scl";
        case DecoderKind::USc: return "u-sc";
        case DecoderKind::UScl: return "u-scl";
    }
    return "?";
}

bool decoder_uses_tables(DecoderKind kind) {
    return kind == DecoderKind::QSc || kind == DecoderKind::QScl;
}

namespace {

bool decoder_uses_uniform(DecoderKind kind) {
    return kind == DecoderKind::USc || kind == DecoderKind::UScl;
}

bool decoder_is_list(DecoderKind kind) {
    return kind == DecoderKind::FloatScl || kind == DecoderKind::QScl ||
           kind == DecoderKind::UScl;
}

}  // namespace

void validate(const SimConfig& cfg) {
    if (cfg.code_len < 2 || (cfg.code_len & (cfg.code_len - 1)) != 0)
        throw config_error("code length must be a power of two >= 2");
    if (cfg.info_len < 1 || cfg.info_len > cfg.code_len)
        throw config_error("info length must be in [1, N]");
    if (cfg.quant_bits < 2 || cfg.quant_bits > 7)
        throw config_error("quantizer bits must be in [2, 7]");
    if (cfg.list_size < 1) throw config_error("list size must be >= 1");
    if (cfg.max_frames < 1) throw config_error("max frames must be >= 1");
    if (cfg.target_block_errors < 1) throw config_error("target block errors must be >= 1");
    if (cfg.ebn0_step <= 0.0) throw config_error("Eb/N0 step must be positive");
    if (cfg.ebn0_stop < cfg.ebn0_start) throw config_error("empty Eb/N0 sweep");
}

std::vector<double> sweep_points(const SimConfig& cfg) {
    std::vector<double> points;
    for (int i = 0;; ++i) {
        double e = cfg.ebn0_start + i * cfg.ebn0_step;
        if (e > cfg.ebn0_stop + 1e-9) break;
        points.push_back(e);
    }
    return points;
}

LutSet load_or_build_tables(const SimConfig& cfg) {
    const int levels = 1 << cfg.quant_bits;
    const double rate = static_cast<double>(cfg.info_len) / cfg.code_len;

    if (!cfg.tables_path.empty() && std::filesystem::exists(cfg.tables_path)) {
        LutSet luts = import_tables(cfg.tables_path);
        double sigma = ebn0_to_sigma(cfg.design_ebn0_db, rate);
        UniformGrid grid = design_uniform_grid(sigma, 128);
        if (luts.code_len != cfg.code_len || luts.levels != levels ||
            luts.design_ebn0_db != cfg.design_ebn0_db || luts.grid.levels != grid.levels ||
            luts.grid.lo != grid.lo || luts.grid.step != grid.step)
            throw config_error("cached tables at '" + cfg.tables_path +
                               "' were built for a different configuration");
        return luts;
    }

    LutSet luts = build_lut_set(cfg.code_len, levels, cfg.design_ebn0_db, rate);
    if (!cfg.tables_path.empty()) export_tables(luts, cfg.tables_path);
    return luts;
}

namespace {

struct FrameOutcome {
    int bit_errors = 0;
    std::uint8_t block_error = 0;
};

struct FrameEvaluator {
    const SimConfig& cfg;
    const CodeConfig& code;
    double sigma;
    const LutSet* tables;
    const UniformScalarQuantizer* uniform_q;

    FrameOutcome operator()(long frame_index) const {
        FrameRng rng(cfg.seed, static_cast<std::uint64_t>(frame_index));

        BitBlock message(code.info_len);
        for (auto& b : message) b = static_cast<std::uint8_t>(rng.next_bit());

        BitBlock codeword = encode(code, message);
        std::vector<double> received = transmit(codeword, sigma, rng);
        std::vector<double> llrs(received.size());
        for (std::size_t j = 0; j < received.size(); ++j)
            llrs[j] = llr_convert(received[j], sigma);

        BitBlock decoded;
        switch (cfg.decoder) {
            case DecoderKind::FloatSc:
                decoded = sc_decode(code, llrs);
                break;
            case DecoderKind::FloatScl:
                decoded = scl_decode(code, llrs, cfg.list_size);
                break;
            case DecoderKind::QSc:
                decoded = qsc_decode(code, quantize_channel_llrs(llrs, *tables), *tables);
                break;
            case DecoderKind::QScl:
                decoded = qscl_decode(code, quantize_channel_llrs(llrs, *tables), *tables,
                                      cfg.list_size);
                break;
            case DecoderKind::USc:
                decoded = uniform_baseline_decode(code, llrs, *uniform_q, 1);
                break;
            case DecoderKind::UScl:
                decoded = uniform_baseline_decode(code, llrs, *uniform_q, cfg.list_size);
                break;
        }

        FrameOutcome out;
        for (int i = 0; i < code.info_len; ++i) out.bit_errors += decoded[i] != message[i];
        out.block_error = out.bit_errors > 0;
        return out;
    }
};

}  // namespace

BlerPoint run_bler_point(const SimConfig& cfg, double ebn0_db, const LutSet* tables) {
    validate(cfg);
    if (decoder_uses_tables(cfg.decoder) && tables == nullptr)
        throw config_error("decoder " + decoder_kind_name(cfg.decoder) +
                           " requires precomputed tables");
    if (tables != nullptr && decoder_uses_tables(cfg.decoder) &&
        tables->code_len != cfg.code_len)
        throw config_error("tables were built for a different code length");

    const auto start = std::chrono::steady_clock::now();
    const CodeConfig code = make_code_config(cfg.code_len, cfg.info_len);
    const double rate = static_cast<double>(cfg.info_len) / cfg.code_len;
    const double sigma = ebn0_to_sigma(ebn0_db, rate);

    UniformScalarQuantizer uniform_q;
    if (decoder_uses_uniform(cfg.decoder)) {
        double design_sigma = ebn0_to_sigma(cfg.design_ebn0_db, rate);
        UniformGrid grid = design_uniform_grid(design_sigma, 128);
        uniform_q =
            design_uniform_scalar_quantizer(grid_distribution(design_sigma, grid),
                                            1 << cfg.quant_bits);
    }

    const FrameEvaluator evaluate{cfg, code, sigma, tables, &uniform_q};

    BlerPoint point;
    point.ebn0_db = ebn0_db;

    const long batch_size = cfg.parallel ? 512 : 1;
    std::vector<FrameOutcome> outcomes(batch_size);
    long next_frame = 0;
    bool done = false;
    std::string deferred_error;
    while (!done && next_frame < cfg.max_frames) {
        const long this_batch = std::min(batch_size, cfg.max_frames - next_frame);
#pragma omp parallel for schedule(dynamic) if (cfg.parallel)
        for (long i = 0; i < this_batch; ++i) {
            try {
                outcomes[i] = evaluate(next_frame + i);
            } catch (const std::exception& e) {
#pragma omp critical
                if (deferred_error.empty()) deferred_error = e.what();
            }
        }
        if (!deferred_error.empty()) throw std::runtime_error(deferred_error);

        // Scan in frame order so early stopping lands on the same frame the
        // serial runner would stop at.
        for (long i = 0; i < this_batch && !done; ++i) {
            ++point.frames;
            point.bit_errors += outcomes[i].bit_errors;
            point.block_errors += outcomes[i].block_error;
            if (point.block_errors >= cfg.target_block_errors) done = true;
        }
        next_frame += this_batch;
    }

    point.bler = static_cast<double>(point.block_errors) / static_cast<double>(point.frames);
    point.ber = static_cast<double>(point.bit_errors) /
                (static_cast<double>(point.frames) * cfg.info_len);
    point.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return point;
}

std::vector<BlerPoint> run_sweep(const SimConfig& cfg) {
    validate(cfg);
    std::optional<LutSet> tables;
    if (decoder_uses_tables(cfg.decoder)) tables = load_or_build_tables(cfg);

    std::vector<BlerPoint> points;
    for (double ebn0 : sweep_points(cfg))
        points.push_back(run_bler_point(cfg, ebn0, tables ? &*tables : nullptr));

    if (!cfg.out_path.empty()) {
        std::ofstream out(cfg.out_path);
        if (!out) throw io_error("cannot open '" + cfg.out_path + "' for writing");
        write_csv(out, points);
        out.flush();
        if (!out) throw io_error("write failed for '" + cfg.out_path + "'");
    }
    return points;
}

const char* const kCsvHeader = "ebn0_db,frames,block_errors,bit_errors,bler,ber";

void write_csv_row(std::ostream& out, const BlerPoint& p) {
    std::ostringstream row;
    row.precision(10);
    row << p.ebn0_db << ',' << p.frames << ',' << p.block_errors << ',' << p.bit_errors << ','
        << p.bler << ',' << p.ber;
    out << row.str() << '\n';
}

void write_csv(std::ostream& out, const std::vector<BlerPoint>& points) {
    out << kCsvHeader << '\n';
    for (const auto& p : points) write_csv_row(out, p);
}

}  // namespace polarq
