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
#ifndef SSP_SPECTRUM_HPP
#define SSP_SPECTRUM_HPP

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "ssp/instance.hpp"

namespace ssp {

/// The idealized collective signal
///
///   g(t) = prod_j (1 + exp(i 2 pi a_j f0 t)) / 2
///        = sum_sigma N(sigma) / 2^n * exp(i 2 pi sigma f0 t),
///
/// one line per achievable subset sum sigma, at sigma * f0, with amplitude
/// N(sigma) / 2^n. Complex exponentials (not cosines) so that only sum
/// frequencies appear; |g| <= 1 and g(0) = 1. Periodic with period 1 / f0.
class CollectiveSignalModel {
   public:
    /// Throws ConfigError unless f0 is finite and positive.
    CollectiveSignalModel(SspInstance instance, double f0 = 1.0);

    const SspInstance& instance() const noexcept { return instance_; }
    double f0() const noexcept { return f0_; }

   private:
    SspInstance instance_;
    double f0_;
};

struct SpectralLine {
    std::uint64_t sum;
    double frequency_hz;
    Count multiplicity;
    double amplitude;
};

struct ExactSpectrum {
    std::size_t n = 0;
    double f0 = 1.0;
    std::vector<SpectralLine> lines;  // sorted by sum

    /// sum over lines of amplitude^2: the mean power of g over one period.
    double total_power() const noexcept;
};

/// All lines of the model. n <= 24 (uses enumerate_subset_sums).
ExactSpectrum exact_spectrum(const SspInstance& instance, double f0 = 1.0);

/// N(s) / 2^n via count_dp; 0 for unachievable or out-of-range s.
double exact_amplitude(const SspInstance& instance, std::uint64_t s);

std::complex<double> eval_signal(const CollectiveSignalModel& model, double t);

/// Highest line frequency, f0 * total.
double bandwidth(const SspInstance& instance, double f0 = 1.0);

/// f0 times the smallest spacing between distinct achievable sums. n <= 24.
double min_gap(const SspInstance& instance, double f0 = 1.0);

/// N(s)^2 / sum_sigma N(sigma)^2: share of the mean signal power carried by
/// the line at s. n <= 24.
double energy_fraction(const SspInstance& instance, std::uint64_t s);

/// CSV with columns sum,frequency_hz,multiplicity,amplitude.
void write_spectrum_csv(std::ostream& out, const ExactSpectrum& spectrum);

}  // namespace ssp

#endif
