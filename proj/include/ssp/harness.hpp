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
#ifndef SSP_HARNESS_HPP
#define SSP_HARNESS_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ssp/generators.hpp"
#include "ssp/instance.hpp"
#include "ssp/signal_sim.hpp"

namespace ssp {

inline constexpr std::uint64_t kDefaultSampleCeiling = std::uint64_t{1} << 26;

// ---------------------------------------------------------------------------
// Reliability search

struct SearchOptions {
    std::uint64_t seed = kDefaultSeed;
    /// Largest per-trial sample count the search may try.
    std::uint64_t ceiling = kDefaultSampleCeiling;
    unsigned jobs = 1;
    /// Defaults to twice the line bandwidth.
    std::optional<double> sample_rate;
    ThresholdPolicy policy = ThresholdPolicy::half_min_line();
};

struct RequiredSamples {
    /// Smallest sample count found; equals the ceiling when censored.
    std::uint64_t samples = 0;
    /// The ceiling was reached without meeting the reliability target.
    bool censored = false;
    /// Empirical fraction of correct decisions at `samples`.
    double reliability = 0.0;
    double sample_rate = 0.0;
    /// Number of (samples, trials) probes evaluated.
    std::size_t probes = 0;

    bool operator==(const RequiredSamples&) const = default;
};

/// Smallest measurement length at which the readout gets the answer right
/// in at least `reliability` of `trials` seeded noise realizations.
///
/// A detector drowned in noise answers YES to everything, which would make
/// YES targets look reliable at any length. Odd-numbered trials therefore
/// pose a control query of the opposite answer on the same measurement: for
/// a YES target, an absent line (the smallest unachievable sum, or the first
/// empty bin above the band); for a NO target, the DC line, which has the
/// smallest possible amplitude 2^-n. Even trials run decide_readout on the
/// target. Without a usable control every trial queries the target.
///
/// Lengths are whole base periods (doubling, then bisection on the period
/// count), so every line stays on an exact bin. Trial t always uses noise
/// stream (seed, t), whatever the length, so probes share random numbers.
///
/// Targets outside [0, total] need no measurement and return 0.
/// Throws ConfigError for negative noise or reliability outside (0.5, 1).
RequiredSamples required_samples(const SspInstance& instance, double f0, double noise_sigma, double reliability,
                                 std::size_t trials, const SearchOptions& options = {});

/// required_samples over a set of noise levels, reported in ascending sigma
/// order as a running maximum so the curve never decreases with noise.
std::vector<std::pair<double, RequiredSamples>> required_samples_profile(const SspInstance& instance, double f0,
                                                                         std::vector<double> noise_sigmas,
                                                                         double reliability, std::size_t trials,
                                                                         const SearchOptions& options = {});

// ---------------------------------------------------------------------------
// Sweeps

enum class Experiment { energy, time, samples, accuracy };

std::string_view to_string(Experiment e) noexcept;
std::optional<Experiment> parse_experiment(std::string_view text) noexcept;

struct FamilySpec {
    FamilyKind kind = FamilyKind::powers_of_two;
    std::uint64_t max_value = 100;
    bool max_value_pow2_n = false;
    SolutionBias bias = SolutionBias::force_yes;
    /// Row label; defaults to the kind name.
    std::string label;

    std::string name() const { return label.empty() ? std::string(to_string(kind)) : label; }
    bool operator==(const FamilySpec&) const = default;
};

struct SweepSpec {
    Experiment experiment = Experiment::energy;
    std::vector<FamilySpec> families;
    std::vector<std::size_t> n_values;
    std::size_t trials_per_point = 1;
    double reliability_target = 0.95;
    std::optional<double> noise_sigma;
    std::optional<std::uint64_t> sample_budget;
    std::optional<double> max_frequency_hz;
    double f0 = 1.0;
    std::uint64_t seed = kDefaultSeed;
    std::uint64_t sample_ceiling = kDefaultSampleCeiling;
    bool record_wall_time = false;

    /// Throws InputError describing the first violated constraint.
    void validate() const;
    bool operator==(const SweepSpec&) const = default;
};

struct SweepRow {
    std::string family;
    std::size_t n = 0;
    std::uint64_t seed = 0;
    std::optional<double> energy_fraction;
    std::optional<double> min_gap_hz;
    std::optional<double> bandwidth_hz;
    std::optional<std::uint64_t> required_samples;
    bool censored = false;
    std::optional<double> required_duration_s;
    std::optional<double> decision_accuracy;
    double wall_time_s = 0.0;
};

struct FitResult {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
};

struct SweepReport {
    SweepSpec spec;
    std::vector<SweepRow> rows;
    /// Per family label; fitted on (n, log2 metric).
    std::map<std::string, FitResult> fits;
    /// Accuracy sweeps: first n whose accuracy drops below the reliability
    /// target, per family label (nullopt when it never does).
    std::map<std::string, std::optional<std::size_t>> crossover_n;
};

/// Ordinary least squares y = slope * x + intercept.
/// Throws InputError for fewer than 3 points or all-equal x.
FitResult fit_loglinear(std::span<const std::pair<double, double>> points);

/// Exact energy fraction of the target line per n (geometric mean over
/// trials, since the fit is on log2), with mean min gap and bandwidth.
/// Fit: log2(energy_fraction) vs n. n <= 24.
SweepReport run_energy_sweep(const SweepSpec& spec, unsigned jobs = 1);

/// Fixed hardware cap F_max: f0 = F_max / total, duration = 1 / f0.
/// Fit: log2(required_duration_s) vs n.
SweepReport run_time_sweep(const SweepSpec& spec, unsigned jobs = 1);

/// required_samples at fixed noise_sigma per n (one seeded instance per n,
/// trials_per_point Monte Carlo trials per probe).
/// Fit: log2(required_samples) vs n over uncensored rows.
SweepReport run_samples_sweep(const SweepSpec& spec, unsigned jobs = 1);

/// Decision accuracy under a fixed sample budget and noise level, on trial
/// sets alternating force_yes / force_no instances.
SweepReport run_accuracy_collapse(const SweepSpec& spec, unsigned jobs = 1);

/// Dispatches on spec.experiment.
SweepReport run_sweep(const SweepSpec& spec, unsigned jobs = 1);

}  // namespace ssp

#endif
