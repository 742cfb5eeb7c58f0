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
#include <chrono>
#include <cmath>
#include <string>

#include "ssp/errors.hpp"
#include "ssp/format.hpp"
#include "ssp/harness.hpp"
#include "ssp/oracle.hpp"
#include "ssp/parallel.hpp"
#include "ssp/random.hpp"
#include "ssp/spectrum.hpp"

namespace ssp {

namespace {

constexpr int kMaxForceNoAttempts = 64;

std::uint64_t family_seed(const SweepSpec& spec, std::size_t family_index) {
    return stream_seed(spec.seed, family_index);
}

/// gen_family, redrawing random force_no instances whose every in-range
/// value happens to be achievable.
SspInstance make_instance(const FamilySpec& family, std::size_t n, SolutionBias bias, std::uint64_t seed) {
    FamilyParams params{family.max_value, family.max_value_pow2_n, seed, bias};
    if (family.kind != FamilyKind::random || bias != SolutionBias::force_no) return gen_family(family.kind, n, params);
    for (int attempt = 0; attempt < kMaxForceNoAttempts; ++attempt) {
        params.seed = attempt == 0 ? seed : stream_seed(seed, static_cast<std::uint64_t>(attempt));
        try {
            return gen_family(family.kind, n, params);
        } catch (const InputError&) {
        }
    }
    throw InputError("could not draw a force_no instance for n = " + std::to_string(n));
}

class RowTimer {
   public:
    double elapsed() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

   private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

SweepRow new_row(const SweepSpec& spec, const FamilySpec& family, std::size_t n) {
    SweepRow row;
    row.family = family.name();
    row.n = n;
    row.seed = spec.seed;
    return row;
}

template <typename Metric>
void fit_rows(SweepReport& report, Metric metric) {
    for (const auto& family : report.spec.families) {
        std::vector<std::pair<double, double>> points;
        for (const auto& row : report.rows) {
            if (row.family != family.name()) continue;
            if (const auto y = metric(row); y && *y > 0.0) points.emplace_back(static_cast<double>(row.n), std::log2(*y));
        }
        if (points.size() >= 3) report.fits[family.name()] = fit_loglinear(points);
    }
}

double mean(const std::vector<double>& xs) {
    double total = 0.0;
    for (const double x : xs) total += x;
    return total / static_cast<double>(xs.size());
}

}  // namespace

std::string_view to_string(Experiment e) noexcept {
    switch (e) {
        case Experiment::energy:
            return "energy";
        case Experiment::time:
            return "time";
        case Experiment::samples:
            return "samples";
        case Experiment::accuracy:
            return "accuracy";
    }
    return "?";
}

std::optional<Experiment> parse_experiment(std::string_view text) noexcept {
    for (auto e : {Experiment::energy, Experiment::time, Experiment::samples, Experiment::accuracy}) {
        if (text == to_string(e)) return e;
    }
    return std::nullopt;
}

void SweepSpec::validate() const {
    if (families.empty()) throw InputError("sweep needs at least one family");
    if (n_values.empty()) throw InputError("sweep needs at least one n value");
    for (std::size_t i = 0; i < n_values.size(); ++i) {
        if (n_values[i] == 0) throw InputError("n values must be positive");
        if (i > 0 && n_values[i] <= n_values[i - 1]) throw InputError("n values must be strictly increasing");
    }
    if (trials_per_point == 0) throw InputError("trials_per_point must be at least 1");
    if (!(f0 > 0.0) || !std::isfinite(f0)) throw InputError("f0 must be finite and positive");
    if (!(reliability_target > 0.0 && reliability_target < 1.0)) throw InputError("reliability_target must lie in (0, 1)");
    for (const auto& family : families) {
        if (family.kind == FamilyKind::random && !family.max_value_pow2_n && family.max_value == 0) {
            throw InputError("random family needs max_value >= 1");
        }
    }

    switch (experiment) {
        case Experiment::energy:
            if (n_values.back() > kMaxEnumerationSize) throw InputError("energy sweeps are limited to n <= 24");
            break;
        case Experiment::time:
            if (!max_frequency_hz || !(*max_frequency_hz > 0.0) || !std::isfinite(*max_frequency_hz)) {
                throw InputError("time sweep needs fixed.max_frequency_hz > 0");
            }
            break;
        case Experiment::samples:
            if (!noise_sigma || !(*noise_sigma >= 0.0)) throw InputError("samples sweep needs fixed.noise_sigma >= 0");
            if (!(reliability_target > 0.5)) throw InputError("samples sweep needs reliability_target in (0.5, 1)");
            break;
        case Experiment::accuracy:
            if (!noise_sigma || !(*noise_sigma >= 0.0)) throw InputError("accuracy sweep needs fixed.noise_sigma >= 0");
            if (!sample_budget || *sample_budget == 0) throw InputError("accuracy sweep needs fixed.sample_budget >= 1");
            if (trials_per_point % 2 != 0) throw InputError("accuracy sweep needs an even trials_per_point (balanced YES/NO)");
            break;
    }
}

SweepReport run_energy_sweep(const SweepSpec& spec, unsigned jobs) {
    spec.validate();
    SweepReport report{spec, {}, {}, {}};
    for (std::size_t fi = 0; fi < spec.families.size(); ++fi) {
        const FamilySpec& family = spec.families[fi];
        const std::uint64_t seed = family_seed(spec, fi);
        for (const std::size_t n : spec.n_values) {
            RowTimer timer;
            const std::size_t trials = spec.trials_per_point;
            std::vector<double> fractions(trials), gaps(trials), widths(trials);
            parallel_for(trials, jobs, [&](std::size_t t) {
                const SspInstance instance = make_instance(family, n, family.bias, stream_seed(seed, n, t));
                fractions[t] = energy_fraction(instance, instance.target());
                gaps[t] = min_gap(instance, spec.f0);
                widths[t] = bandwidth(instance, spec.f0);
            });

            // Geometric mean over trials whose target line exists.
            double log_sum = 0.0;
            std::size_t present = 0;
            for (const double f : fractions) {
                if (f > 0.0) {
                    log_sum += std::log2(f);
                    ++present;
                }
            }
            SweepRow row = new_row(spec, family, n);
            row.energy_fraction = present == 0 ? 0.0 : std::exp2(log_sum / static_cast<double>(present));
            row.min_gap_hz = mean(gaps);
            row.bandwidth_hz = mean(widths);
            row.wall_time_s = timer.elapsed();
            report.rows.push_back(std::move(row));
        }
    }
    fit_rows(report, [](const SweepRow& r) { return r.energy_fraction; });
    return report;
}

SweepReport run_time_sweep(const SweepSpec& spec, unsigned jobs) {
    spec.validate();
    SweepReport report{spec, {}, {}, {}};
    const double f_max = *spec.max_frequency_hz;
    for (std::size_t fi = 0; fi < spec.families.size(); ++fi) {
        const FamilySpec& family = spec.families[fi];
        const std::uint64_t seed = family_seed(spec, fi);
        for (const std::size_t n : spec.n_values) {
            RowTimer timer;
            const std::size_t trials = spec.trials_per_point;
            std::vector<double> durations(trials), gaps(trials), widths(trials);
            parallel_for(trials, jobs, [&](std::size_t t) {
                const SspInstance instance = make_instance(family, n, family.bias, stream_seed(seed, n, t));
                const double total = static_cast<double>(instance.total());
                const double f0 = f_max / total;
                // One base period resolves lines spaced f0 apart.
                durations[t] = total / f_max;
                widths[t] = bandwidth(instance, f0);
                gaps[t] = n <= kMaxEnumerationSize ? min_gap(instance, f0) : std::nan("");
            });
            SweepRow row = new_row(spec, family, n);
            row.required_duration_s = mean(durations);
            row.bandwidth_hz = mean(widths);
            if (n <= kMaxEnumerationSize) row.min_gap_hz = mean(gaps);
            row.wall_time_s = timer.elapsed();
            report.rows.push_back(std::move(row));
        }
    }
    fit_rows(report, [](const SweepRow& r) { return r.required_duration_s; });
    return report;
}

SweepReport run_samples_sweep(const SweepSpec& spec, unsigned jobs) {
    spec.validate();
    SweepReport report{spec, {}, {}, {}};
    for (std::size_t fi = 0; fi < spec.families.size(); ++fi) {
        const FamilySpec& family = spec.families[fi];
        const std::uint64_t seed = family_seed(spec, fi);
        for (const std::size_t n : spec.n_values) {
            RowTimer timer;
            const SspInstance instance = make_instance(family, n, family.bias, stream_seed(seed, n, 0));
            SearchOptions options;
            options.seed = stream_seed(seed, n, 1);
            options.ceiling = spec.sample_ceiling;
            options.jobs = jobs;
            const RequiredSamples found = required_samples(instance, spec.f0, *spec.noise_sigma, spec.reliability_target,
                                                           spec.trials_per_point, options);
            SweepRow row = new_row(spec, family, n);
            row.required_samples = found.samples;
            row.censored = found.censored;
            if (found.sample_rate > 0.0) row.required_duration_s = static_cast<double>(found.samples) / found.sample_rate;
            row.bandwidth_hz = bandwidth(instance, spec.f0);
            if (n <= kMaxEnumerationSize) row.energy_fraction = energy_fraction(instance, instance.target());
            row.wall_time_s = timer.elapsed();
            report.rows.push_back(std::move(row));
        }
    }
    fit_rows(report, [](const SweepRow& r) -> std::optional<double> {
        if (r.censored || !r.required_samples) return std::nullopt;
        return static_cast<double>(*r.required_samples);
    });
    return report;
}

SweepReport run_accuracy_collapse(const SweepSpec& spec, unsigned jobs) {
    spec.validate();
    SweepReport report{spec, {}, {}, {}};
    const std::uint64_t budget = *spec.sample_budget;
    for (std::size_t fi = 0; fi < spec.families.size(); ++fi) {
        const FamilySpec& family = spec.families[fi];
        const std::uint64_t seed = family_seed(spec, fi);
        std::optional<std::size_t> crossover;
        for (const std::size_t n : spec.n_values) {
            RowTimer timer;
            const std::size_t trials = spec.trials_per_point;
            std::vector<unsigned char> correct(trials);
            parallel_for(trials, jobs, [&](std::size_t t) {
                const SolutionBias bias = t % 2 == 0 ? SolutionBias::force_yes : SolutionBias::force_no;
                const std::uint64_t trial_seed = stream_seed(seed, n, t);
                const SspInstance instance = make_instance(family, n, bias, trial_seed);
                SimConfig config;
                config.sample_rate = 2.0 * bandwidth(instance, spec.f0);
                config.noise_sigma = *spec.noise_sigma;
                config.seed = stream_seed(trial_seed, 1);
                // Whole base periods when the budget allows; otherwise the
                // truncated budget, with leakage.
                const std::uint64_t period = samples_per_period(config, spec.f0).value_or(0);
                config.num_samples = (period != 0 && budget >= period) ? budget / period * period : budget;
                const ReadoutResult r = decide_readout(instance, spec.f0, config);
                correct[t] = r.decision == decide_dp(instance.values(), instance.target());
            });
            std::size_t hits = 0;
            for (const auto c : correct) hits += c;
            SweepRow row = new_row(spec, family, n);
            row.decision_accuracy = static_cast<double>(hits) / static_cast<double>(trials);
            if (!crossover && *row.decision_accuracy < spec.reliability_target) crossover = n;
            row.wall_time_s = timer.elapsed();
            report.rows.push_back(std::move(row));
        }
        report.crossover_n[family.name()] = crossover;
    }
    return report;
}

SweepReport run_sweep(const SweepSpec& spec, unsigned jobs) {
    switch (spec.experiment) {
        case Experiment::energy:
            return run_energy_sweep(spec, jobs);
        case Experiment::time:
            return run_time_sweep(spec, jobs);
        case Experiment::samples:
            return run_samples_sweep(spec, jobs);
        case Experiment::accuracy:
            return run_accuracy_collapse(spec, jobs);
    }
    throw InputError("unknown experiment");
}

}  // namespace ssp
