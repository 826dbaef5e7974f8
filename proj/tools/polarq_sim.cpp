// Monte-Carlo BLER simulation front end.
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "polarq/simulation.hpp"

int main(int argc, char** argv) {
    CLI::App app{"polarq: quantized polar decoding BLER simulation"};

    polarq::SimConfig cfg;
    std::string decoder = "float-sc";
    bool serial = false;

    app.add_option("--n", cfg.code_len, "code length N (power of two)")->required();
    app.add_option("--k", cfg.info_len, "information length K")->required();
    app.add_option("--decoder", decoder,
                   "float-sc | float-scl | q-sc | q-scl | u-sc | u-scl");
    app.add_option("--list-size", cfg.list_size, "SCL list size");
    app.add_option("--bits", cfg.quant_bits, "quantizer bits (levels = 2^bits)");
    app.add_option("--design-ebn0", cfg.design_ebn0_db, "design Eb/N0 in dB for quantizers");
    app.add_option("--ebn0-start", cfg.ebn0_start, "sweep start in dB")->required();
    app.add_option("--ebn0-stop", cfg.ebn0_stop, "sweep stop in dB")->required();
    app.add_option("--ebn0-step", cfg.ebn0_step, "sweep step in dB");
    app.add_option("--max-frames", cfg.max_frames, "frame cap per point");
    app.add_option("--target-errors", cfg.target_block_errors, "block errors per point");
    app.add_option("--seed", cfg.seed, "base RNG seed");
    app.add_option("--tables", cfg.tables_path, "table cache file for q-* decoders");
    app.add_option("--out", cfg.out_path, "CSV output path");
    app.add_flag("--serial", serial, "disable the parallel frame loop");

    CLI11_PARSE(app, argc, argv);

    try {
        cfg.decoder = polarq::parse_decoder_kind(decoder);
        cfg.parallel = !serial;
        polarq::validate(cfg);

        std::optional<polarq::LutSet> tables;
        if (polarq::decoder_uses_tables(cfg.decoder)) tables = polarq::load_or_build_tables(cfg);

        std::cout << polarq::kCsvHeader << '\n';
        std::vector<polarq::BlerPoint> points;
        for (double ebn0 : polarq::sweep_points(cfg)) {
            points.push_back(polarq::run_bler_point(cfg, ebn0, tables ? &*tables : nullptr));
            polarq::write_csv_row(std::cout, points.back());
            std::cout.flush();
        }
        if (!cfg.out_path.empty()) {
            std::ofstream out(cfg.out_path);
            if (!out) throw polarq::io_error("cannot open '" + cfg.out_path + "' for writing");
            polarq::write_csv(out, points);
        }
        return 0;
    } catch (const polarq::config_error& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const polarq::io_error& e) {
        std::cerr << "i/o error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 4;
    }
}
