// Copyright 2026 The sspsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include <cmath>
#include <sstream>

#include "gtest/gtest.h"
#include "ssp/errors.hpp"
#include "ssp/generators.hpp"
#include "ssp/oracle.hpp"
#include "ssp/spectrum.hpp"
#include "test_oracles.hpp"

using namespace ssp;

TEST(ExactSpectrum, lines_of_small_instances) {
    const auto s = exact_spectrum(SspInstance({1, 2, 3}, 0), 1.0);
    ASSERT_EQ(s.lines.size(), 7u);
    const double expected[] = {1, 1, 1, 2, 1, 1, 1};
    for (std::size_t i = 0; i < 7; ++i) {
        EXPECT_EQ(s.lines[i].sum, i);
        EXPECT_DOUBLE_EQ(s.lines[i].frequency_hz, static_cast<double>(i));
        EXPECT_DOUBLE_EQ(s.lines[i].amplitude, expected[i] / 8.0);
    }

    const auto dup = exact_spectrum(SspInstance({1, 1}, 0), 2.0);
    ASSERT_EQ(dup.lines.size(), 3u);
    EXPECT_DOUBLE_EQ(dup.lines[1].frequency_hz, 2.0);
    EXPECT_DOUBLE_EQ(dup.lines[2].frequency_hz, 4.0);
    EXPECT_DOUBLE_EQ(dup.lines[0].amplitude, 0.25);
    EXPECT_DOUBLE_EQ(dup.lines[1].amplitude, 0.5);
    EXPECT_DOUBLE_EQ(dup.lines[2].amplitude, 0.25);

    const auto p2 = exact_spectrum(gen_family(FamilyKind::powers_of_two, 3, {}), 1.0);
    ASSERT_EQ(p2.lines.size(), 8u);
    for (const auto& line : p2.lines) EXPECT_EQ(line.amplitude, 0.125);
}

TEST(ExactSpectrum, rejects_bad_f0) {
    EXPECT_THROW(exact_spectrum(SspInstance({1}, 0), 0.0), ConfigError);
    EXPECT_THROW(CollectiveSignalModel(SspInstance({1}, 0), -1.0), ConfigError);
    EXPECT_THROW(bandwidth(SspInstance({1}, 0), std::nan("")), ConfigError);
}

TEST(ExactSpectrum, line_count_bound) {
    SplitMix64 rng(4);
    for (int iter = 0; iter < 50; ++iter) {
        const auto values = oracles::random_values(rng, 1 + rng.uniform_int(0, 11), 30);
        const SspInstance inst(values, 0);
        const auto s = exact_spectrum(inst);
        EXPECT_LE(s.lines.size(), std::min<std::uint64_t>(std::uint64_t{1} << values.size(), inst.total() + 1));
        EXPECT_GE(s.lines.front().amplitude, std::ldexp(1.0, -static_cast<int>(values.size())));
        for (const auto& l : s.lines) {
            EXPECT_GT(l.amplitude, 0.0);
            EXPECT_LE(l.amplitude, 1.0);
        }
    }
}

TEST(ExactAmplitude, examples) {
    EXPECT_DOUBLE_EQ(exact_amplitude(SspInstance(std::vector<std::uint64_t>(4, 1), 0), 2), 0.375);
    EXPECT_DOUBLE_EQ(exact_amplitude(SspInstance({1, 2, 4}, 0), 5), 0.125);
    EXPECT_EQ(exact_amplitude(SspInstance({1, 2, 3}, 0), 7), 0.0);
    EXPECT_EQ(exact_amplitude(SspInstance({2, 4, 6}, 0), 5), 0.0);
}

TEST(ExactAmplitude, agrees_with_counts) {
    SplitMix64 rng(21);
    for (int iter = 0; iter < 30; ++iter) {
        const auto values = oracles::random_values(rng, 1 + rng.uniform_int(0, 9), 25);
        const SspInstance inst(values, 0);
        const auto counts = oracles::brute_force_counts(values);
        for (std::uint64_t s = 0; s <= inst.total() + 2; ++s) {
            const auto it = counts.find(s);
            const double expected = it == counts.end() ? 0.0 : std::ldexp(static_cast<double>(it->second), -static_cast<int>(values.size()));
            ASSERT_EQ(exact_amplitude(inst, s), expected);
        }
    }
}

TEST(EvalSignal, closed_forms) {
    const CollectiveSignalModel any(SspInstance({3, 5, 9}, 0), 2.5);
    EXPECT_EQ(eval_signal(any, 0.0), std::complex<double>(1.0, 0.0));

    const CollectiveSignalModel single(SspInstance({1}, 0), 1.0);
    EXPECT_LT(std::abs(eval_signal(single, 0.5)), 1e-15);
    const auto g = eval_signal(single, 0.125);
    EXPECT_NEAR(g.real(), 0.5 + 0.25 * std::sqrt(2.0), 1e-12);
    EXPECT_NEAR(g.imag(), 0.25 * std::sqrt(2.0), 1e-12);
}

TEST(EvalSignal, expansion_identity) {
    SplitMix64 rng(99);
    for (int iter = 0; iter < 20; ++iter) {
        const std::size_t n = 1 + rng.uniform_int(0, 9);
        const auto values = oracles::random_values(rng, n, 60);
        const double f0 = 0.5 + 3.0 * rng.uniform();
        const CollectiveSignalModel model(SspInstance(values, 0), f0);
        const auto counts = oracles::brute_force_counts(values);
        for (int k = 0; k < 100; ++k) {
            const double t = 10.0 * rng.uniform();
            const auto g = eval_signal(model, t);
            const auto expected = oracles::line_sum(counts, n, f0, t);
            ASSERT_LT(std::abs(std::complex<long double>(g.real(), g.imag()) - expected), 1e-9L);
            ASSERT_LE(std::abs(g), 1.0 + 1e-12);
        }
    }
}

TEST(EvalSignal, parseval_over_one_period) {
    SplitMix64 rng(123);
    for (int iter = 0; iter < 20; ++iter) {
        const std::size_t n = 1 + rng.uniform_int(0, 9);
        const auto values = oracles::random_values(rng, n, 40);
        const double f0 = 1.0 + rng.uniform();
        const SspInstance inst(values, 0);
        const CollectiveSignalModel model(inst, f0);
        // |g|^2 is a trigonometric polynomial of degree <= total, so an
        // equispaced grid of more than 2 * total points averages it exactly.
        const std::uint64_t points = 4 * inst.total() + 7;
        long double power = 0;
        for (std::uint64_t k = 0; k < points; ++k) {
            power += std::norm(eval_signal(model, static_cast<double>(k) / (static_cast<double>(points) * f0)));
        }
        power /= points;
        long double expected = 0;
        for (const auto& [sigma, c] : oracles::brute_force_counts(values)) expected += static_cast<long double>(c) * c;
        expected = std::ldexp(expected, -2 * static_cast<int>(n));
        ASSERT_NEAR(static_cast<double>(power), static_cast<double>(expected), 1e-9);
        ASSERT_NEAR(exact_spectrum(inst, f0).total_power(), static_cast<double>(expected), 1e-12);
    }
}

TEST(Bandwidth, examples) {
    EXPECT_DOUBLE_EQ(bandwidth(SspInstance({1, 2, 4}, 0), 10.0), 70.0);
    EXPECT_DOUBLE_EQ(bandwidth(SspInstance(std::vector<std::uint64_t>(5, 1), 0), 1.0), 5.0);
    EXPECT_DOUBLE_EQ(bandwidth(gen_family(FamilyKind::powers_of_two, 10, {}), 1.0), 1023.0);
}

TEST(MinGap, examples) {
    EXPECT_DOUBLE_EQ(min_gap(SspInstance({5, 10}, 0), 1.0), 5.0);
    EXPECT_DOUBLE_EQ(min_gap(SspInstance({2, 3}, 0), 1.0), 1.0);
    EXPECT_DOUBLE_EQ(min_gap(SspInstance({1, 2, 3}, 0), 0.5), 0.5);
    EXPECT_DOUBLE_EQ(min_gap(SspInstance({7}, 0), 2.0), 14.0);
}

TEST(EnergyFraction, examples) {
    const auto p2 = gen_family(FamilyKind::powers_of_two, 3, {});
    for (std::uint64_t s = 0; s < 8; ++s) EXPECT_EQ(energy_fraction(p2, s), 0.125);
    EXPECT_DOUBLE_EQ(energy_fraction(SspInstance({1, 1}, 0), 1), 4.0 / 6.0);
    EXPECT_EQ(energy_fraction(SspInstance({2, 4}, 0), 3), 0.0);
}

TEST(EnergyFraction, random_instance_matches_brute_force) {
    const auto inst = gen_family(FamilyKind::random, 12, {50, false, 2024, SolutionBias::force_yes});
    const auto counts = oracles::brute_force_counts(std::vector<std::uint64_t>(inst.values().begin(), inst.values().end()));
    long double power = 0;
    for (const auto& [sigma, c] : counts) power += static_cast<long double>(c) * c;
    const long double line = counts.at(inst.target());
    const double f = energy_fraction(inst, inst.target());
    EXPECT_GT(f, 0.0);
    EXPECT_LT(f, 1.0);
    EXPECT_NEAR(f, static_cast<double>(line * line / power), 1e-15);
}

TEST(EnergyFraction, powers_of_two_is_exactly_two_to_minus_n) {
    for (std::size_t n = 1; n <= 20; ++n) {
        const auto inst = gen_family(FamilyKind::powers_of_two, n, {1, false, n, SolutionBias::force_yes});
        ASSERT_EQ(energy_fraction(inst, inst.target()), std::ldexp(1.0, -static_cast<int>(n)));
    }
}

TEST(SpectrumCsv, schema_and_rows) {
    std::ostringstream out;
    write_spectrum_csv(out, exact_spectrum(SspInstance({1, 1}, 0), 2.0));
    EXPECT_EQ(out.str(), "sum,frequency_hz,multiplicity,amplitude\n0,0,1,0.25\n1,2,2,0.5\n2,4,1,0.25\n");
}
