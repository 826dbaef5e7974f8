#include <cmath>

#include "doctest.h"
#include "polarq/channel.hpp"
#include "polarq/density_evolution.hpp"

using namespace polarq;

namespace {

const DiscreteDistribution kPm1{{-1.0, 1.0}, {0.5, 0.5}};

}  // namespace

TEST_CASE("f output distribution") {
    auto out = f_output_distribution(kPm1, kPm1);
    REQUIRE(out.size() == 2);
    CHECK(out.values == std::vector<double>{-1.0, 1.0});
    CHECK(out.probs[0] == doctest::Approx(0.5));
    CHECK(out.probs[1] == doctest::Approx(0.5));

    DiscreteDistribution da{{-1.0}, {1.0}}, db{{2.0}, {1.0}};
    auto point = f_output_distribution(da, db);
    CHECK(point.values == std::vector<double>{-1.0});
    CHECK(point.probs == std::vector<double>{1.0});

    CHECK(out.total_mass() == doctest::Approx(1.0));
}

TEST_CASE("g output distribution") {
    auto out = g_output_distribution(kPm1, kPm1);
    REQUIRE(out.size() == 3);
    CHECK(out.values == std::vector<double>{-2.0, 0.0, 2.0});
    CHECK(out.probs[0] == doctest::Approx(0.25));
    CHECK(out.probs[1] == doctest::Approx(0.5));
    CHECK(out.probs[2] == doctest::Approx(0.25));

    DiscreteDistribution da{{1.0}, {1.0}}, db{{3.0}, {1.0}};
    auto two = g_output_distribution(da, db);
    CHECK(two.values == std::vector<double>{2.0, 4.0});
    CHECK(two.probs[0] == doctest::Approx(0.5));
    CHECK(two.total_mass() == doctest::Approx(1.0));
}

TEST_CASE("node lookup tables against identity quantizers") {
    auto f_out = f_output_distribution(kPm1, kPm1);
    auto g_out = g_output_distribution(kPm1, kPm1);
    auto qf = design_min_distortion_quantizer(f_out, f_out.size());
    auto qg = design_min_distortion_quantizer(g_out, g_out.size());
    auto luts = build_node_luts(kPm1, kPm1, f_out, qf, g_out, qg);

    // Index order (-1 -> 0, +1 -> 1): f(-1,-1)=+1, f(-1,+1)=-1, ...
    CHECK(luts.f_table == std::vector<std::uint16_t>{1, 0, 0, 1});

    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            double a = kPm1.values[i], b = kPm1.values[j];
            int u0 = luts.g_table[(i * 2 + j) * 2];
            int u1 = luts.g_table[(i * 2 + j) * 2 + 1];
            CHECK(g_out.values[u0] == a + b);
            CHECK(g_out.values[u1] == b - a);
            CHECK(u0 < g_out.size());
            CHECK(u1 < g_out.size());
        }
}

TEST_CASE("node path names") {
    CHECK(node_path_name(0, 0) == "-");
    CHECK(node_path_name(1, 0) == "f");
    CHECK(node_path_name(1, 1) == "g");
    CHECK(node_path_name(3, 5) == "gfg");
}

TEST_CASE("density evolution at full resolution keeps exact alphabets") {
    // n=1 with a huge level budget: identity quantizers everywhere.
    auto luts = run_quantized_de(kPm1, 1, 128);
    CHECK(luts.node(0, 0).recon == kPm1.values);
    CHECK(luts.node(1, 0).recon == std::vector<double>{-1.0, 1.0});
    CHECK(luts.node(1, 1).recon == std::vector<double>{-2.0, 0.0, 2.0});
}

TEST_CASE("density evolution structure and normalization") {
    const int n = 4;
    UniformGrid grid = design_uniform_grid(1.0, 128);
    DiscreteDistribution channel = grid_distribution(1.0, grid);

    DeTrace trace;
    LutSet luts = run_quantized_de(channel, n, 32, &trace);
    luts.grid = grid;
    rebuild_grid_to_cell(luts);

    CHECK(static_cast<int>(luts.nodes.size()) == (1 << (n + 1)) - 1);

    int tables = 0;
    for (int depth = 0; depth <= n; ++depth) {
        for (int pos = 0; pos < (1 << depth); ++pos) {
            const auto& node = luts.node(depth, pos);
            REQUIRE(!node.recon.empty());
            CHECK(static_cast<int>(node.recon.size()) <= 32);
            for (std::size_t i = 1; i < node.recon.size(); ++i)
                CHECK(node.recon[i - 1] < node.recon[i]);
            if (depth < n) {
                CHECK(!node.f_table.empty());
                CHECK(!node.g_table.empty());
                tables += 2;
                const std::size_t f_size = luts.node(depth + 1, 2 * pos).recon.size();
                const std::size_t g_size = luts.node(depth + 1, 2 * pos + 1).recon.size();
                for (auto e : node.f_table) CHECK(e < f_size);
                for (auto e : node.g_table) CHECK(e < g_size);
            } else {
                CHECK(node.f_table.empty());
            }
        }
    }
    CHECK(tables == (1 << (n + 1)) - 2);

    for (const auto& dist : trace.node_dist)
        CHECK(dist.total_mass() == doctest::Approx(1.0).epsilon(1e-9));
    for (int depth = 0; depth < n; ++depth)
        for (int pos = 0; pos < (1 << depth); ++pos) {
            int idx = LutSet::node_index(depth, pos);
            CHECK(trace.exact_f[idx].total_mass() == doctest::Approx(1.0).epsilon(1e-9));
            CHECK(trace.exact_g[idx].total_mass() == doctest::Approx(1.0).epsilon(1e-9));
        }
}

TEST_CASE("exact f/g outputs of a symmetric input are symmetric") {
    UniformGrid grid = design_uniform_grid(1.0, 128);
    DiscreteDistribution channel = grid_distribution(1.0, grid);

    for (const auto& out : {f_output_distribution(channel, channel),
                            g_output_distribution(channel, channel)}) {
        const int m = out.size();
        for (int i = 0; i < m; ++i) {
            CHECK(out.values[i] == doctest::Approx(-out.values[m - 1 - i]).epsilon(1e-12));
            CHECK(out.probs[i] == doctest::Approx(out.probs[m - 1 - i]).epsilon(1e-9));
        }
    }
}

TEST_CASE("grid to cell map is consistent with the channel quantizer") {
    UniformGrid grid = design_uniform_grid(1.0, 128);
    DiscreteDistribution channel = grid_distribution(1.0, grid);
    LutSet luts = run_quantized_de(channel, 2, 16);
    luts.grid = grid;
    rebuild_grid_to_cell(luts);

    REQUIRE(static_cast<int>(luts.grid_to_cell.size()) == 128);
    for (int i = 1; i < 128; ++i) CHECK(luts.grid_to_cell[i - 1] <= luts.grid_to_cell[i]);
    CHECK(luts.grid_to_cell.front() == 0);
    CHECK(luts.grid_to_cell.back() == luts.channel_quantizer.cells() - 1);
}
