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
// sspsim: exact oracles, spectra, simulated single-line readout and scaling
// sweeps for the frequency-encoded subset sum machine.
//
// Exit codes: 0 success, 2 input error, 3 size guard, 4 physics/config guard.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "ssp/errors.hpp"
#include "ssp/format.hpp"
#include "ssp/harness.hpp"
#include "ssp/io.hpp"
#include "ssp/oracle.hpp"
#include "ssp/report.hpp"
#include "ssp/signal_sim.hpp"
#include "ssp/spectrum.hpp"

namespace {

constexpr int kExitInput = 2;
constexpr int kExitSize = 3;
constexpr int kExitConfig = 4;

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ssp::InputError("cannot write " + path);
    return out;
}

int cmd_solve(const std::string& instance_path, std::optional<std::uint64_t> target) {
    ssp::SspInstance instance = ssp::load_instance(instance_path);
    if (target) instance = instance.with_target(*target);
    const bool yes = ssp::decide_dp(instance.values(), instance.target());
    const ssp::Count count = ssp::count_dp(instance.values(), instance.target());
    std::cout << (yes ? "YES " : "NO ") << ssp::to_string(count) << '\n';
    return 0;
}

int cmd_spectrum(const std::string& instance_path, double f0, const std::string& out_path) {
    const ssp::SspInstance instance = ssp::load_instance(instance_path);
    const ssp::ExactSpectrum spectrum = ssp::exact_spectrum(instance, f0);
    if (out_path.empty() || out_path == "-") {
        ssp::write_spectrum_csv(std::cout, spectrum);
    } else {
        auto out = open_output(out_path);
        ssp::write_spectrum_csv(out, spectrum);
    }
    return 0;
}

struct SimulateArgs {
    std::string instance_path;
    double f0 = 1.0;
    std::optional<double> sample_rate;
    std::optional<double> duration;
    std::optional<std::uint64_t> num_samples;
    double noise_sigma = 0.0;
    std::optional<int> adc_bits;
    std::uint64_t seed = ssp::kDefaultSeed;
    std::string threshold = "half_min_line";
    bool fractional_duration = false;
    std::string out_path;
};

int cmd_simulate(const SimulateArgs& args) {
    const ssp::SspInstance instance = ssp::load_instance(args.instance_path);
    ssp::ThresholdPolicy policy = ssp::ThresholdPolicy::half_min_line();
    if (args.threshold != "half_min_line") {
        std::size_t used = 0;
        double value = 0.0;
        try {
            value = std::stod(args.threshold, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != args.threshold.size() || !(value >= 0.0)) {
            throw ssp::InputError("--threshold must be half_min_line or a nonnegative number");
        }
        policy = ssp::ThresholdPolicy::absolute(value);
    }

    const ssp::CollectiveSignalModel model(instance, args.f0);
    ssp::SimOptions options;
    options.sample_rate = args.sample_rate;
    options.duration = args.duration;
    options.num_samples = args.num_samples;
    options.whole_periods = !args.fractional_duration;
    options.noise_sigma = args.noise_sigma;
    options.adc_bits = args.adc_bits;
    options.seed = args.seed;
    const ssp::SimConfig config = ssp::make_sim_config(model, options);

    const ssp::ReadoutResult result = ssp::decide_readout(instance, args.f0, config, policy);
    std::cout << (result.decision ? "YES" : "NO") << ' ' << ssp::format_double(result.magnitude) << ' '
              << ssp::format_double(result.threshold) << '\n';
    if (!args.out_path.empty()) {
        auto out = open_output(args.out_path);
        ssp::write_readout_csv(out, std::span(&result, 1));
    }
    return 0;
}

int cmd_sweep(const std::string& spec_path, const std::string& out_path, const std::string& format_name,
              unsigned jobs, bool timing) {
    ssp::SweepSpec spec = ssp::load_sweep_spec(spec_path);
    if (timing) spec.record_wall_time = true;
    const auto format = ssp::parse_report_format(format_name);
    if (!format) throw ssp::InputError("--format must be csv, json or long");

    const ssp::SweepReport report = ssp::run_sweep(spec, jobs);
    if (out_path.empty() || out_path == "-") {
        ssp::emit_report(report, *format, std::cout);
        return 0;
    }
    auto out = open_output(out_path);
    ssp::emit_report(report, *format, out);
    for (const auto& [label, fit] : report.fits) {
        std::cout << "fit " << label << " slope " << ssp::format_double(fit.slope) << " intercept "
                  << ssp::format_double(fit.intercept) << " r2 " << ssp::format_double(fit.r_squared) << '\n';
    }
    for (const auto& [label, n] : report.crossover_n) {
        std::cout << "crossover " << label << ' ' << (n ? std::to_string(*n) : std::string("none")) << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Frequency-encoded subset sum machine: oracles, spectra, readout simulation and scaling sweeps"};
    app.require_subcommand(1);

    std::string instance_path;
    std::optional<std::uint64_t> solve_target;
    auto* solve = app.add_subcommand("solve", "Exact YES/NO and multiplicity via dynamic programming");
    solve->add_option("instance", instance_path, "Instance JSON file")->required();
    solve->add_option("--target", solve_target, "Override the instance target");

    double f0 = 1.0;
    std::string out_path;
    auto* spectrum = app.add_subcommand("spectrum", "Export the exact line spectrum as CSV (n <= 24)");
    spectrum->add_option("instance", instance_path, "Instance JSON file")->required();
    spectrum->add_option("--f0", f0, "Base frequency in Hz");
    spectrum->add_option("-o,--output", out_path, "Output CSV (default stdout)");

    SimulateArgs sim;
    auto* simulate = app.add_subcommand("simulate", "Simulate a noisy sampled single-line readout");
    simulate->add_option("instance", sim.instance_path, "Instance JSON file")->required();
    simulate->add_option("--f0", sim.f0, "Base frequency in Hz");
    simulate->add_option("--sample-rate", sim.sample_rate, "Sample rate in Hz (default 2x bandwidth)");
    simulate->add_option("--duration", sim.duration, "Measurement duration in s (default 1/f0)");
    simulate->add_option("--num-samples", sim.num_samples, "Sample count; overrides --duration");
    simulate->add_option("--noise-sigma", sim.noise_sigma, "Per-sample complex Gaussian noise std");
    simulate->add_option("--adc-bits", sim.adc_bits, "Quantize I and Q to this many bits over [-2, 2]");
    simulate->add_option("--seed", sim.seed, "Noise seed");
    simulate->add_option("--threshold", sim.threshold, "half_min_line or an absolute magnitude");
    simulate->add_flag("--fractional-duration", sim.fractional_duration,
                       "Keep the duration as given instead of rounding to whole base periods");
    simulate->add_option("-o,--output", sim.out_path, "Also write the readout as CSV");

    std::string spec_path;
    std::string format = "csv";
    unsigned jobs = 1;
    bool timing = false;
    auto* sweep = app.add_subcommand("sweep", "Run a scaling sweep and write a report");
    sweep->add_option("spec", spec_path, "Sweep spec JSON file")->required();
    sweep->add_option("-o,--output", out_path, "Report path (default stdout)");
    sweep->add_option("--format", format, "csv, json or long");
    sweep->add_option("--jobs", jobs, "Worker threads; output does not depend on it");
    sweep->add_flag("--timing", timing, "Fill wall_time_s (makes output run-dependent)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInput;
    }

    try {
        if (*solve) return cmd_solve(instance_path, solve_target);
        if (*spectrum) return cmd_spectrum(instance_path, f0, out_path);
        if (*simulate) return cmd_simulate(sim);
        if (*sweep) return cmd_sweep(spec_path, out_path, format, jobs, timing);
    } catch (const ssp::SizeLimitError& e) {
        std::cerr << "sspsim: size limit: " << e.what() << '\n';
        return kExitSize;
    } catch (const ssp::ConfigError& e) {
        std::cerr << "sspsim: configuration: " << e.what() << '\n';
        return kExitConfig;
    } catch (const ssp::InputError& e) {
        std::cerr << "sspsim: input: " << e.what() << '\n';
        return kExitInput;
    }
    return kExitInput;
}
