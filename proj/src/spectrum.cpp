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
#include "ssp/spectrum.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>
#include <string>
#include <utility>

#include "ssp/errors.hpp"
#include "ssp/format.hpp"
#include "ssp/oracle.hpp"

namespace ssp {

namespace {

void check_f0(double f0) {
    if (!(f0 > 0.0) || !std::isfinite(f0)) {
        throw ConfigError("base frequency f0 must be finite and positive (got " + format_double(f0) + ")");
    }
}

double scaled_count(Count c, std::size_t n) { return std::ldexp(static_cast<double>(c), -static_cast<int>(n)); }

}  // namespace

CollectiveSignalModel::CollectiveSignalModel(SspInstance instance, double f0)
    : instance_(std::move(instance)), f0_(f0) {
    check_f0(f0);
}

double ExactSpectrum::total_power() const noexcept {
    double power = 0.0;
    for (const auto& line : lines) power += line.amplitude * line.amplitude;
    return power;
}

ExactSpectrum exact_spectrum(const SspInstance& instance, double f0) {
    check_f0(f0);
    const SumMultiplicities mult = enumerate_subset_sums(instance);
    ExactSpectrum spectrum;
    spectrum.n = instance.size();
    spectrum.f0 = f0;
    spectrum.lines.reserve(mult.num_lines());
    for (std::size_t i = 0; i < mult.num_lines(); ++i) {
        spectrum.lines.push_back({mult.sums[i], static_cast<double>(mult.sums[i]) * f0, mult.counts[i],
                                  scaled_count(mult.counts[i], instance.size())});
    }
    return spectrum;
}

double exact_amplitude(const SspInstance& instance, std::uint64_t s) {
    if (s > instance.total()) return 0.0;
    return scaled_count(count_dp(instance.values(), s), instance.size());
}

std::complex<double> eval_signal(const CollectiveSignalModel& model, double t) {
    std::complex<double> g{1.0, 0.0};
    for (const std::uint64_t a : model.instance().values()) {
        // Reduce the phase to one turn before scaling by 2 pi.
        const double cycles = static_cast<double>(a) * model.f0() * t;
        const double turn = cycles - std::floor(cycles);
        g *= 0.5 * (1.0 + std::polar(1.0, 2.0 * std::numbers::pi * turn));
    }
    return g;
}

double bandwidth(const SspInstance& instance, double f0) {
    check_f0(f0);
    return f0 * static_cast<double>(instance.total());
}

double min_gap(const SspInstance& instance, double f0) {
    check_f0(f0);
    const SumMultiplicities mult = enumerate_subset_sums(instance);
    std::uint64_t gap = std::numeric_limits<std::uint64_t>::max();
    for (std::size_t i = 1; i < mult.sums.size(); ++i) gap = std::min(gap, mult.sums[i] - mult.sums[i - 1]);
    return f0 * static_cast<double>(gap);
}

double energy_fraction(const SspInstance& instance, std::uint64_t s) {
    const SumMultiplicities mult = enumerate_subset_sums(instance);
    Count power = 0;
    for (const Count c : mult.counts) power += c * c;
    const Count line = mult.at(s);
    return static_cast<double>(line * line) / static_cast<double>(power);
}

void write_spectrum_csv(std::ostream& out, const ExactSpectrum& spectrum) {
    out << "sum,frequency_hz,multiplicity,amplitude\n";
    for (const auto& line : spectrum.lines) {
        out << line.sum << ',' << format_double(line.frequency_hz) << ',' << to_string(line.multiplicity) << ','
            << format_double(line.amplitude) << '\n';
    }
}

}  // namespace ssp
