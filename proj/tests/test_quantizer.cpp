#include <stdexcept>
#include <cmath>

#include "doctest.h"
#include "polarq/quantizer.hpp"
#include "polarq/quantizer_oracle.hpp"
#include "polarq/rng.hpp"

using namespace polarq;

namespace {

// Random strictly-ascending distribution with 2..max_size symbols.
DiscreteDistribution random_distribution(FrameRng& rng, int max_size) {
    int m = 2 + static_cast<int>(rng.next_u32() % (max_size - 1));
    std::vector<double> values(m), probs(m);
    for (int i = 0; i < m; ++i) {
        values[i] = 10.0 * rng.next_double() - 5.0;
        probs[i] = 0.05 + rng.next_double();
    }
    double mass = 0.0;
    for (double p : probs) mass += p;
    for (double& p : probs) p /= mass;
    return merge_duplicates(std::move(values), std::move(probs));
}

DiscreteDistribution mirrored(const DiscreteDistribution& dist) {
    std::vector<double> values, probs;
    for (int i = dist.size() - 1; i >= 0; --i) {
        values.push_back(-dist.values[i]);
        probs.push_back(dist.probs[i]);
    }
    return DiscreteDistribution{std::move(values), std::move(probs)};
}

}  // namespace

TEST_CASE("merge_duplicates") {
    auto merged = merge_duplicates({1, 1, 2}, {0.2, 0.3, 0.5});
    CHECK(merged.values == std::vector<double>{1, 2});
    CHECK(merged.probs[0] == doctest::Approx(0.5));
    CHECK(merged.probs[1] == doctest::Approx(0.5));

    auto sorted = merge_duplicates({2, 1}, {0.5, 0.5});
    CHECK(sorted.values == std::vector<double>{1, 2});

    auto dropped = merge_duplicates({0, 1}, {1.0, 0.0});
    CHECK(dropped.values == std::vector<double>{0});
    CHECK(dropped.probs == std::vector<double>{1.0});

    CHECK_THROWS_AS(merge_duplicates({}, {}), std::invalid_argument);
    CHECK_THROWS_AS(merge_duplicates({1, 2}, {0.0, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(merge_duplicates({1}, {-0.5}), std::invalid_argument);
}

TEST_CASE("centroid and partial distortion") {
    DiscreteDistribution pm1{{-1, 1}, {0.5, 0.5}};
    CHECK(centroid(pm1, 0, 2) == doctest::Approx(0.0));
    CHECK(partial_distortion(pm1, 0, 2) == doctest::Approx(1.0));

    DiscreteDistribution skew{{1, 2}, {0.25, 0.75}};
    CHECK(centroid(skew, 0, 2) == doctest::Approx(1.75));
    CHECK(partial_distortion(skew, 0, 2) == doctest::Approx(0.1875));

    CHECK(centroid(skew, 1, 2) == doctest::Approx(2.0));
    CHECK(partial_distortion(skew, 1, 2) == doctest::Approx(0.0));

    CHECK_THROWS_AS(centroid(skew, 0, 3), std::invalid_argument);
}

TEST_CASE("dynamic-programming quantizer on pinned cases") {
    DiscreteDistribution four{{-3, -1, 1, 3}, {0.25, 0.25, 0.25, 0.25}};

    auto identity = design_min_distortion_quantizer(four, 4);
    CHECK(identity.distortion == doctest::Approx(0.0));
    CHECK(identity.recon == four.values);
    CHECK(identity.boundaries == std::vector<int>{0, 1, 2, 3, 4});

    DiscreteDistribution pm1{{-1, 1}, {0.5, 0.5}};
    auto one = design_min_distortion_quantizer(pm1, 1);
    CHECK(one.recon[0] == doctest::Approx(0.0));
    CHECK(one.distortion == doctest::Approx(1.0));

    // Exhaustive over the three 2-cell partitions: D in {2.0, 1.0, 2.0}.
    auto two = design_min_distortion_quantizer(four, 2);
    CHECK(two.boundaries == std::vector<int>{0, 2, 4});
    CHECK(two.recon[0] == doctest::Approx(-2.0));
    CHECK(two.recon[1] == doctest::Approx(2.0));
    CHECK(two.distortion == doctest::Approx(1.0));

    CHECK_THROWS_AS(design_min_distortion_quantizer(four, 5), std::invalid_argument);
    CHECK_THROWS_AS(design_min_distortion_quantizer(four, 0), std::invalid_argument);
}

TEST_CASE("dynamic program matches the exhaustive oracle") {
    FrameRng rng(101, 0);
    for (int trial = 0; trial < 300; ++trial) {
        auto dist = random_distribution(rng, 12);
        int cells = 1 + static_cast<int>(rng.next_u32() % dist.size());
        auto dp = design_min_distortion_quantizer(dist, cells);
        auto oracle = brute_force_quantizer(dist, cells);
        CHECK(dp.distortion == doctest::Approx(oracle.distortion).epsilon(1e-12));

        // Centroid condition and monotonicity.
        for (int k = 0; k < cells; ++k) {
            CHECK(dp.recon[k] ==
                  doctest::Approx(centroid(dist, dp.boundaries[k], dp.boundaries[k + 1]))
                      .epsilon(1e-12));
            if (k > 0) {
                CHECK(dp.recon[k - 1] < dp.recon[k]);
                CHECK(dp.boundaries[k] < dp.boundaries[k + 1]);
            }
        }
    }
}

TEST_CASE("distortion is non-increasing in the cell count") {
    FrameRng rng(55, 0);
    for (int trial = 0; trial < 50; ++trial) {
        auto dist = random_distribution(rng, 12);
        double last = std::numeric_limits<double>::infinity();
        for (int cells = 1; cells <= dist.size(); ++cells) {
            double d = design_min_distortion_quantizer(dist, cells).distortion;
            CHECK(d <= last + 1e-12);
            last = d;
        }
    }
}

TEST_CASE("optimal distortion is mirror invariant on symmetric inputs") {
    FrameRng rng(77, 0);
    for (int trial = 0; trial < 50; ++trial) {
        auto half = random_distribution(rng, 6);
        std::vector<double> values, probs;
        for (int i = half.size() - 1; i >= 0; --i) {
            values.push_back(-std::abs(half.values[i]) - 0.1);
            probs.push_back(half.probs[i]);
        }
        for (int i = 0; i < half.size(); ++i) {
            values.push_back(std::abs(half.values[i]) + 0.1);
            probs.push_back(half.probs[i]);
        }
        auto sym = merge_duplicates(std::move(values), std::move(probs));
        int cells = 2 * (1 + static_cast<int>(rng.next_u32() % (sym.size() / 2)));
        cells = std::min(cells, sym.size());
        auto fwd = design_min_distortion_quantizer(sym, cells);
        auto rev = design_min_distortion_quantizer(mirrored(sym), cells);
        CHECK(fwd.distortion == doctest::Approx(rev.distortion).epsilon(1e-9));
    }
}

TEST_CASE("apply_quantizer") {
    DiscreteDistribution four{{-3, -1, 1, 3}, {0.25, 0.25, 0.25, 0.25}};
    auto identity = design_min_distortion_quantizer(four, 4);
    auto same = apply_quantizer(four, identity);
    CHECK(same.values == four.values);
    CHECK(same.probs == four.probs);

    auto two = design_min_distortion_quantizer(four, 2);
    auto compressed = apply_quantizer(four, two);
    CHECK(compressed.values[0] == doctest::Approx(-2.0));
    CHECK(compressed.values[1] == doctest::Approx(2.0));
    CHECK(compressed.probs[0] == doctest::Approx(0.5));
    CHECK(compressed.total_mass() == doctest::Approx(1.0));

    DiscreteDistribution other{{0, 1}, {0.5, 0.5}};
    CHECK_THROWS_AS(apply_quantizer(other, two), std::invalid_argument);
}

TEST_CASE("uniform baseline quantizer") {
    DiscreteDistribution pm1{{-1, 1}, {0.5, 0.5}};
    auto two = design_uniform_quantizer(pm1, 2);
    CHECK(two.distortion == doctest::Approx(0.0));
    CHECK(two.boundaries == std::vector<int>{0, 1, 2});
    CHECK(two.recon[0] == doctest::Approx(-1.0));
    CHECK(two.recon[1] == doctest::Approx(1.0));

    DiscreteDistribution point{{5.0}, {1.0}};
    CHECK(design_uniform_quantizer(point, 4).distortion == doctest::Approx(0.0));

    // Saturation on the value-space object.
    auto uq = design_uniform_scalar_quantizer(pm1, 4);
    CHECK(uq.quantize(1e9) == uq.recon.back());
    CHECK(uq.quantize(-1e9) == uq.recon.front());
}

TEST_CASE("uniform quantizer never beats the dynamic program") {
    FrameRng rng(303, 0);
    bool strict_somewhere = false;
    for (int trial = 0; trial < 100; ++trial) {
        auto dist = random_distribution(rng, 12);
        int cells = 2 + static_cast<int>(rng.next_u32() % 6);
        cells = std::min(cells, dist.size());
        double d_uniform = design_uniform_quantizer(dist, cells).distortion;
        double d_dp = design_min_distortion_quantizer(dist, cells).distortion;
        CHECK(d_uniform >= d_dp - 1e-12);
        if (d_uniform > d_dp + 1e-9) strict_somewhere = true;
    }
    CHECK(strict_somewhere);
}

TEST_CASE("brute force oracle sanity") {
    DiscreteDistribution four{{-3, -1, 1, 3}, {0.25, 0.25, 0.25, 0.25}};
    CHECK(brute_force_quantizer(four, 2).distortion == doctest::Approx(1.0));
    CHECK(brute_force_quantizer(four, 4).distortion == doctest::Approx(0.0));

    // K = 1 returns the distribution variance.
    DiscreteDistribution skew{{0, 1, 3}, {0.5, 0.25, 0.25}};
    double mean = 0.25 + 0.75;
    double var = 0.5 * mean * mean + 0.25 * (1 - mean) * (1 - mean) + 0.25 * (3 - mean) * (3 - mean);
    CHECK(brute_force_quantizer(skew, 1).distortion == doctest::Approx(var));

    DiscreteDistribution big{std::vector<double>(17), std::vector<double>(17)};
    for (int i = 0; i < 17; ++i) {
        big.values[i] = i;
        big.probs[i] = 1.0 / 17;
    }
    CHECK_THROWS_AS(brute_force_quantizer(big, 3), std::invalid_argument);
}
