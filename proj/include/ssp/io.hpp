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
#ifndef SSP_IO_HPP
#define SSP_IO_HPP

#include <filesystem>
#include <string>
#include <string_view>

#include "ssp/harness.hpp"
#include "ssp/instance.hpp"

namespace ssp {

/// {"values": [int, ...], "target": int}. Throws InputError on malformed
/// JSON, missing fields, non-integers, or non-positive values.
SspInstance parse_instance_json(std::string_view text);
SspInstance load_instance(const std::filesystem::path& path);
std::string instance_to_json(const SspInstance& instance);

/// Sweep specification, e.g.
///
///   {"experiment": "energy",
///    "families": [{"kind": "powers_of_two"},
///                 {"kind": "random", "max_value": 50, "solution_bias": "force_yes"}],
///    "n_values": [4, 5, 6], "trials_per_point": 100, "reliability_target": 0.95,
///    "fixed": {"noise_sigma": 0.5, "sample_budget": 4096, "max_frequency_hz": 1e6},
///    "f0": 1.0, "seed": 7, "sample_ceiling": 67108864, "record_wall_time": false}
///
/// "family" (one object) may stand in for "families". "max_value" also
/// accepts the string "2^n". Unknown keys are rejected. Throws InputError.
SweepSpec parse_sweep_spec(std::string_view text);
SweepSpec load_sweep_spec(const std::filesystem::path& path);
/// Canonical JSON echo of a spec (every field, fixed key order).
std::string sweep_spec_to_json(const SweepSpec& spec);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace ssp

#endif
