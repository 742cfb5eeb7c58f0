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
#include "ssp/signal_sim.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <string>

#include "ssp/errors.hpp"
#include "ssp/format.hpp"
#include "ssp/oracle.hpp"

namespace ssp {

namespace {

constexpr std::uint64_t kMaxTwiddleTable = std::uint64_t{1} << 20;

inline void neumaier_add(double& sum, double& compensation, double v) noexcept {
    const double t = sum + v;
    compensation += std::abs(sum) >= std::abs(v) ? (sum - t) + v : (v - t) + sum;
    sum = t;
}

}  // namespace

void validate(const SimConfig& config, const CollectiveSignalModel& model) {
    const double required = bandwidth(model.instance(), model.f0());
    if (!std::isfinite(config.sample_rate) || !(config.sample_rate > required)) {
        throw ConfigError("sample rate " + format_double(config.sample_rate) + " Hz does not exceed the line bandwidth " +
                          format_double(required) + " Hz; the complex signal needs a rate above " +
                          format_double(required) + " Hz (default " + format_double(2.0 * required) + " Hz)");
    }
    if (config.num_samples == 0) throw ConfigError("num_samples must be at least 1");
    if (!(config.noise_sigma >= 0.0) || !std::isfinite(config.noise_sigma)) {
        throw ConfigError("noise_sigma must be finite and nonnegative");
    }
    if (config.adc_bits && (*config.adc_bits < 2 || *config.adc_bits > 32)) {
        throw ConfigError("adc_bits must lie in [2, 32] (got " + std::to_string(*config.adc_bits) + ")");
    }
}

std::optional<std::uint64_t> samples_per_period(const SimConfig& config, double f0) {
    const double ratio = config.sample_rate / f0;
    if (!std::isfinite(ratio) || ratio < 0.5 || ratio > 9.0e15) return std::nullopt;
    const double rounded = std::round(ratio);
    if (std::abs(ratio - rounded) > 1e-9 * ratio) return std::nullopt;
    return static_cast<std::uint64_t>(rounded);
}

SimConfig make_sim_config(const CollectiveSignalModel& model, const SimOptions& options) {
    SimConfig config;
    config.sample_rate = options.sample_rate.value_or(options.rate_margin * bandwidth(model.instance(), model.f0()));
    config.noise_sigma = options.noise_sigma;
    config.adc_bits = options.adc_bits;
    config.seed = options.seed;

    if (options.num_samples) {
        config.num_samples = *options.num_samples;
    } else {
        const double f0 = model.f0();
        double duration = options.duration.value_or(1.0 / f0);
        if (!(duration > 0.0) || !std::isfinite(duration)) throw ConfigError("duration must be finite and positive");
        const auto period = samples_per_period(config, f0);
        if (options.whole_periods) {
            const double periods = std::max(1.0, std::round(duration * f0));
            if (period) {
                config.num_samples = static_cast<std::uint64_t>(periods) * *period;
            } else {
                duration = periods / f0;
                config.num_samples = static_cast<std::uint64_t>(std::max(1.0, std::round(duration * config.sample_rate)));
            }
        } else {
            config.num_samples = static_cast<std::uint64_t>(std::max(1.0, std::round(duration * config.sample_rate)));
        }
    }
    validate(config, model);
    return config;
}

SignalSynthesizer::SignalSynthesizer(const CollectiveSignalModel& model, const SimConfig& config)
    : model_(model),
      sample_rate_(config.sample_rate),
      noise_scale_(config.noise_sigma / std::numbers::sqrt2),
      rng_(config.seed) {
    validate(config, model);
    if (config.adc_bits) adc_step_ = 2.0 * kQuantizerRange / std::ldexp(1.0, *config.adc_bits);
    if (const auto period = samples_per_period(config, model.f0())) {
        period_ = *period;
        const std::uint64_t size = std::min(period_, config.num_samples);
        table_.reserve(static_cast<std::size_t>(size));
        for (std::uint64_t i = 0; i < size; ++i) {
            table_.push_back(eval_signal(model_, static_cast<double>(i) / sample_rate_));
        }
    }
}

std::complex<double> SignalSynthesizer::clean(std::uint64_t k) const {
    if (period_ != 0) {
        const std::uint64_t i = k % period_;
        if (i < table_.size()) return table_[static_cast<std::size_t>(i)];
        return eval_signal(model_, static_cast<double>(i) / sample_rate_);
    }
    return eval_signal(model_, static_cast<double>(k) / sample_rate_);
}

double SignalSynthesizer::quantize(double x) const noexcept {
    const double half_levels = kQuantizerRange / adc_step_;
    const double level = std::clamp(std::floor(x / adc_step_), -half_levels, half_levels - 1.0);
    return (level + 0.5) * adc_step_;
}

std::complex<double> SignalSynthesizer::next() {
    std::complex<double> x;
    if (period_ != 0 && phase_ < table_.size()) {
        x = table_[phase_];
    } else {
        x = clean(index_);
    }
    ++index_;
    if (period_ != 0 && ++phase_ == period_) phase_ = 0;
    if (noise_scale_ > 0.0) {
        const auto [z1, z2] = rng_.normal_pair();
        x += std::complex<double>(noise_scale_ * z1, noise_scale_ * z2);
    }
    if (adc_step_ > 0.0) x = {quantize(x.real()), quantize(x.imag())};
    return x;
}

SampledSignal synthesize(const CollectiveSignalModel& model, const SimConfig& config) {
    SignalSynthesizer synth(model, config);
    SampledSignal signal;
    signal.sample_rate = config.sample_rate;
    signal.samples.reserve(static_cast<std::size_t>(config.num_samples));
    for (std::uint64_t k = 0; k < config.num_samples; ++k) signal.samples.push_back(synth.next());
    return signal;
}

BinProjector::BinProjector(double cycles_per_sample) : cycles_per_sample_(cycles_per_sample) {}

BinProjector::BinProjector(std::uint64_t numerator, std::uint64_t period, std::uint64_t expected_samples)
    : numerator_(period == 0 ? 0 : numerator % period), period_(period) {
    if (period == 0) throw InputError("BinProjector period must be positive");
    if (period_ <= kMaxTwiddleTable && (expected_samples == 0 || period_ <= expected_samples)) {
        table_.reserve(static_cast<std::size_t>(period_));
        for (std::uint64_t i = 0; i < period_; ++i) {
            table_.push_back(std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(period_)));
        }
    }
}

std::complex<double> BinProjector::twiddle() const noexcept {
    if (period_ != 0) {
        if (!table_.empty()) return table_[static_cast<std::size_t>(phase_index_)];
        return std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>(phase_index_) / static_cast<double>(period_));
    }
    const double cycles = cycles_per_sample_ * static_cast<double>(count_);
    return std::polar(1.0, -2.0 * std::numbers::pi * (cycles - std::floor(cycles)));
}

void BinProjector::add(std::complex<double> x) noexcept {
    // Written out: operator* on std::complex takes the slow NaN-recovery path.
    const std::complex<double> w = twiddle();
    neumaier_add(re_, re_c_, x.real() * w.real() - x.imag() * w.imag());
    neumaier_add(im_, im_c_, x.real() * w.imag() + x.imag() * w.real());
    ++count_;
    if (period_ != 0) {
        phase_index_ += numerator_;
        if (phase_index_ >= period_) phase_index_ -= period_;
    }
}

std::complex<double> BinProjector::value() const noexcept {
    if (count_ == 0) return {0.0, 0.0};
    const double scale = 1.0 / static_cast<double>(count_);
    return {(re_ + re_c_) * scale, (im_ + im_c_) * scale};
}

std::complex<double> single_bin_readout(const SampledSignal& signal, double f_target) {
    if (signal.samples.empty()) throw InputError("single_bin_readout needs a nonempty signal");
    BinProjector projector(f_target / signal.sample_rate);
    for (const auto& x : signal.samples) projector.add(x);
    return projector.value();
}

double ThresholdPolicy::threshold_for(std::size_t n) const noexcept {
    if (absolute_) return value_;
    return std::ldexp(1.0, -static_cast<int>(n) - 1);
}

ReadoutResult readout_line(const SspInstance& instance, double f0, const SimConfig& config, std::uint64_t sum,
                           ThresholdPolicy policy) {
    ReadoutResult result;
    result.n = instance.size();
    result.target = sum;
    result.target_frequency = static_cast<double>(sum) * f0;
    result.threshold = policy.threshold_for(instance.size());
    result.seed = config.seed;

    const CollectiveSignalModel model(instance, f0);
    SignalSynthesizer synth(model, config);
    const auto period = samples_per_period(config, f0);
    BinProjector projector = period ? BinProjector(sum % *period, *period, config.num_samples)
                                    : BinProjector(result.target_frequency / config.sample_rate);
    for (std::uint64_t k = 0; k < config.num_samples; ++k) projector.add(synth.next());

    result.amplitude_estimate = projector.value();
    result.magnitude = std::abs(result.amplitude_estimate);
    result.decision = result.magnitude >= result.threshold;
    if (config.noise_sigma > 0.0) {
        try {
            result.snr_estimate = readout_snr(instance, config, sum);
        } catch (const SizeLimitError&) {
            // Too large to count exactly; leave the estimate out.
        }
    }
    return result;
}

ReadoutResult decide_readout(const SspInstance& instance, double f0, const SimConfig& config, ThresholdPolicy policy) {
    if (instance.target_in_range()) return readout_line(instance, f0, config, instance.target(), policy);
    ReadoutResult result;
    result.n = instance.size();
    result.target = instance.target();
    result.target_frequency = static_cast<double>(instance.target()) * f0;
    result.threshold = policy.threshold_for(instance.size());
    result.seed = config.seed;
    result.simulated = false;
    return result;
}

double readout_snr(const SspInstance& instance, const SimConfig& config, std::uint64_t s) {
    if (!(config.noise_sigma > 0.0)) throw ConfigError("readout_snr needs noise_sigma > 0");
    const double amplitude = exact_amplitude(instance, s);
    return amplitude * amplitude * static_cast<double>(config.num_samples) / (config.noise_sigma * config.noise_sigma);
}

void write_readout_csv(std::ostream& out, std::span<const ReadoutResult> results) {
    out << "n,target,magnitude,threshold,decision,snr_estimate,seed\n";
    for (const auto& r : results) {
        out << r.n << ',' << r.target << ',' << format_double(r.magnitude) << ',' << format_double(r.threshold) << ','
            << (r.decision ? "YES" : "NO") << ',';
        if (r.snr_estimate) out << format_double(*r.snr_estimate);
        out << ',' << r.seed << '\n';
    }
}

}  // namespace ssp
