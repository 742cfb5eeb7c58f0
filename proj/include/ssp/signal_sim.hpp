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
#ifndef SSP_SIGNAL_SIM_HPP
#define SSP_SIGNAL_SIM_HPP

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "ssp/instance.hpp"
#include "ssp/random.hpp"
#include "ssp/spectrum.hpp"

namespace ssp {

inline constexpr std::uint64_t kDefaultSeed = 20240601;
inline constexpr double kQuantizerRange = 2.0;

/// Finite measurement of the collective signal. Noise is additive complex
/// Gaussian: each sample gets noise_sigma * (z1 + i z2) / sqrt(2) with z1, z2
/// standard normals, so E|noise|^2 = noise_sigma^2. With adc_bits set, the
/// real and imaginary parts are quantized (after noise) to 2^adc_bits
/// mid-rise levels spanning [-2, 2], clipping outside.
struct SimConfig {
    double sample_rate = 0.0;
    std::uint64_t num_samples = 1;
    double noise_sigma = 0.0;
    std::optional<int> adc_bits;
    std::uint64_t seed = kDefaultSeed;

    double duration() const noexcept { return static_cast<double>(num_samples) / sample_rate; }

    bool operator==(const SimConfig&) const = default;
};

struct SimOptions {
    /// Defaults to rate_margin * bandwidth.
    std::optional<double> sample_rate;
    double rate_margin = 2.0;
    /// Defaults to one base period 1 / f0. Ignored when num_samples is set.
    std::optional<double> duration;
    std::optional<std::uint64_t> num_samples;
    /// Round the duration to a whole number (>= 1) of base periods, which
    /// keeps every line on an exact DFT bin.
    bool whole_periods = true;
    double noise_sigma = 0.0;
    std::optional<int> adc_bits;
    std::uint64_t seed = kDefaultSeed;
};

/// Builds and validates a SimConfig for a model.
SimConfig make_sim_config(const CollectiveSignalModel& model, const SimOptions& options = {});

/// Throws ConfigError when sample_rate does not exceed the line bandwidth
/// (the message names the required rate), or on num_samples == 0, negative
/// noise, or adc_bits outside [2, 32].
void validate(const SimConfig& config, const CollectiveSignalModel& model);

/// Samples per base period, when sample_rate / f0 is an integer.
std::optional<std::uint64_t> samples_per_period(const SimConfig& config, double f0);

struct SampledSignal {
    std::vector<std::complex<double>> samples;
    double sample_rate = 0.0;
};

/// Streams the samples of a measurement one at a time, so long measurements
/// never need to be held in memory. synthesize() is this, collected.
class SignalSynthesizer {
   public:
    SignalSynthesizer(const CollectiveSignalModel& model, const SimConfig& config);

    std::complex<double> next();
    std::uint64_t position() const noexcept { return index_; }

   private:
    std::complex<double> clean(std::uint64_t k) const;
    double quantize(double x) const noexcept;

    CollectiveSignalModel model_;
    double sample_rate_;
    double noise_scale_;
    double adc_step_ = 0.0;
    std::uint64_t period_ = 0;
    std::vector<std::complex<double>> table_;
    SplitMix64 rng_;
    std::uint64_t index_ = 0;
    std::uint64_t phase_ = 0;  // index_ % period_
};

SampledSignal synthesize(const CollectiveSignalModel& model, const SimConfig& config);

/// Single-bin DFT accumulator: (1/N) sum_k x_k exp(-i 2 pi nu k), nu in
/// cycles per sample. Sums are compensated (Neumaier).
class BinProjector {
   public:
    /// Arbitrary frequency.
    explicit BinProjector(double cycles_per_sample);
    /// Exact rational frequency numerator / period; twiddle phases are
    /// tracked as integers modulo the period.
    BinProjector(std::uint64_t numerator, std::uint64_t period, std::uint64_t expected_samples = 0);

    void add(std::complex<double> x) noexcept;
    std::complex<double> value() const noexcept;
    std::uint64_t count() const noexcept { return count_; }

   private:
    std::complex<double> twiddle() const noexcept;

    double cycles_per_sample_ = 0.0;
    std::uint64_t numerator_ = 0;
    std::uint64_t period_ = 0;
    std::uint64_t phase_index_ = 0;
    std::vector<std::complex<double>> table_;
    double re_ = 0.0, re_c_ = 0.0, im_ = 0.0, im_c_ = 0.0;
    std::uint64_t count_ = 0;
};

/// (1/N) sum_k samples[k] exp(-i 2 pi f_target k / sample_rate).
/// Throws InputError for an empty signal.
std::complex<double> single_bin_readout(const SampledSignal& signal, double f_target);

class ThresholdPolicy {
   public:
    /// 2^-(n+1): halfway between an absent line and the weakest possible one.
    static ThresholdPolicy half_min_line() noexcept { return ThresholdPolicy(false, 0.0); }
    static ThresholdPolicy absolute(double threshold) noexcept { return ThresholdPolicy(true, threshold); }

    double threshold_for(std::size_t n) const noexcept;
    bool is_absolute() const noexcept { return absolute_; }

   private:
    ThresholdPolicy(bool absolute, double value) noexcept : absolute_(absolute), value_(value) {}
    bool absolute_;
    double value_;
};

struct ReadoutResult {
    std::size_t n = 0;
    std::uint64_t target = 0;
    double target_frequency = 0.0;
    std::complex<double> amplitude_estimate;
    double magnitude = 0.0;
    double threshold = 0.0;
    bool decision = false;
    std::optional<double> snr_estimate;
    std::uint64_t seed = 0;
    /// False when the target was outside [0, total] and nothing was measured.
    bool simulated = true;

    bool operator==(const ReadoutResult&) const = default;
};

/// Synthesizes the measurement, projects onto sum * f0 and thresholds,
/// whatever sum is (bins above the band hold only noise).
ReadoutResult readout_line(const SspInstance& instance, double f0, const SimConfig& config, std::uint64_t sum,
                           ThresholdPolicy policy = ThresholdPolicy::half_min_line());

/// readout_line at the instance target. Targets outside [0, total] are NO
/// without simulation.
ReadoutResult decide_readout(const SspInstance& instance, double f0, const SimConfig& config,
                             ThresholdPolicy policy = ThresholdPolicy::half_min_line());

/// Predicted post-projection power ratio (N(s) / 2^n)^2 * num_samples / noise_sigma^2.
/// Throws ConfigError for noise_sigma <= 0.
double readout_snr(const SspInstance& instance, const SimConfig& config, std::uint64_t s);

/// Columns n,target,magnitude,threshold,decision,snr_estimate,seed.
void write_readout_csv(std::ostream& out, std::span<const ReadoutResult> results);

}  // namespace ssp

#endif
