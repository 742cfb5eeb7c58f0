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
#include <algorithm>
#include <atomic>
#include <cmath>

#include "ssp/errors.hpp"
#include "ssp/format.hpp"
#include "ssp/harness.hpp"
#include "ssp/oracle.hpp"
#include "ssp/parallel.hpp"

namespace ssp {

namespace {

struct Control {
    std::uint64_t sum;
    bool present;
};

std::optional<Control> control_query(const SspInstance& instance, bool target_present, std::uint64_t period) {
    if (!target_present) return Control{0, true};
    if (instance.total() < kMaxReachableSum) {
        const ReachableSet reachable(instance.values(), instance.total());
        if (reachable.count() <= instance.total()) return Control{reachable.nth_missing(0), false};
    }
    // Above the band; must not alias back onto a line.
    if (instance.total() + 1 < period) return Control{instance.total() + 1, false};
    return std::nullopt;
}

}  // namespace

RequiredSamples required_samples(const SspInstance& instance, double f0, double noise_sigma, double reliability,
                                 std::size_t trials, const SearchOptions& options) {
    if (!(noise_sigma >= 0.0) || !std::isfinite(noise_sigma)) throw ConfigError("noise_sigma must be nonnegative");
    if (!(reliability > 0.5 && reliability < 1.0)) {
        throw ConfigError("reliability must lie in (0.5, 1) (got " + format_double(reliability) + ")");
    }
    if (trials == 0) throw InputError("required_samples needs at least one trial");

    RequiredSamples out;
    if (!instance.target_in_range()) {
        out.reliability = 1.0;
        return out;
    }

    const CollectiveSignalModel model(instance, f0);
    SimConfig base;
    base.sample_rate = options.sample_rate.value_or(2.0 * bandwidth(instance, f0));
    base.noise_sigma = noise_sigma;
    validate(base, model);
    out.sample_rate = base.sample_rate;

    const std::uint64_t period =
        samples_per_period(base, f0).value_or(static_cast<std::uint64_t>(std::ceil(base.sample_rate / f0)));
    const std::uint64_t max_periods = options.ceiling / period;
    const auto needed = static_cast<std::size_t>(std::ceil(reliability * static_cast<double>(trials) - 1e-9));
    const bool truth = decide_dp(instance.values(), instance.target());
    const std::optional<Control> control = control_query(instance, truth, period);

    // A probe stops early once it cannot pass, unless it must report its
    // reliability. Passing probes always run every trial, and the verdict
    // never depends on which trials ran, so results stay scheduling-free.
    std::vector<unsigned char> correct(trials);
    const std::size_t allowed_failures = trials - needed;
    auto probe = [&](std::uint64_t periods, bool complete) {
        SimConfig config = base;
        config.num_samples = periods * period;
        std::atomic<std::size_t> failures{0};
        std::fill(correct.begin(), correct.end(), 0);
        parallel_for(trials, options.jobs, [&](std::size_t t) {
            if (!complete && failures.load(std::memory_order_relaxed) > allowed_failures) return;
            SimConfig trial_config = config;
            trial_config.seed = stream_seed(options.seed, t);
            bool ok = false;
            if (control && t % 2 == 1) {
                ok = readout_line(instance, f0, trial_config, control->sum, options.policy).decision == control->present;
            } else {
                ok = decide_readout(instance, f0, trial_config, options.policy).decision == truth;
            }
            correct[t] = ok;
            if (!ok) failures.fetch_add(1, std::memory_order_relaxed);
        });
        ++out.probes;
        if (!complete && failures.load() > allowed_failures) return std::size_t{0};
        return static_cast<std::size_t>(std::count(correct.begin(), correct.end(), 1));
    };
    auto fraction = [&](std::size_t c) { return static_cast<double>(c) / static_cast<double>(trials); };

    if (max_periods == 0) {
        out.samples = options.ceiling;
        out.censored = true;
        return out;
    }

    // Doubling: find a passing period count hi, with lo the last failing one.
    std::uint64_t lo = 0;
    std::uint64_t hi = 1;
    std::size_t hits = 0;
    for (;;) {
        hi = std::min(hi, max_periods);
        hits = probe(hi, hi == max_periods);
        if (hits >= needed) break;
        if (hi == max_periods) {
            out.samples = options.ceiling;
            out.censored = true;
            out.reliability = fraction(hits);
            return out;
        }
        lo = hi;
        hi *= 2;
    }

    // Bisection on (lo, hi].
    while (hi - lo > 1) {
        const std::uint64_t mid = lo + (hi - lo) / 2;
        const std::size_t c = probe(mid, false);
        if (c >= needed) {
            hi = mid;
            hits = c;
        } else {
            lo = mid;
        }
    }
    out.samples = hi * period;
    out.reliability = fraction(hits);
    return out;
}

std::vector<std::pair<double, RequiredSamples>> required_samples_profile(const SspInstance& instance, double f0,
                                                                         std::vector<double> noise_sigmas,
                                                                         double reliability, std::size_t trials,
                                                                         const SearchOptions& options) {
    std::sort(noise_sigmas.begin(), noise_sigmas.end());
    std::vector<std::pair<double, RequiredSamples>> profile;
    profile.reserve(noise_sigmas.size());
    for (const double sigma : noise_sigmas) {
        RequiredSamples r = required_samples(instance, f0, sigma, reliability, trials, options);
        if (!profile.empty()) {
            const RequiredSamples& prev = profile.back().second;
            if (prev.censored || (!r.censored && r.samples < prev.samples)) {
                r.samples = prev.samples;
                r.censored = prev.censored;
            }
        }
        profile.emplace_back(sigma, r);
    }
    return profile;
}

}  // namespace ssp
