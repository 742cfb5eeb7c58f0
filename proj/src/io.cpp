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
#include "ssp/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "spec_json.hpp"
#include "ssp/errors.hpp"

namespace ssp {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

json parse_json(std::string_view text) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
}

std::uint64_t as_uint(const json& j, const std::string& what) {
    if (!j.is_number_integer()) throw InputError(what + " must be an integer");
    if (!j.is_number_unsigned()) throw InputError(what + " must be nonnegative");
    return j.get<std::uint64_t>();
}

double as_double(const json& j, const std::string& what) {
    if (!j.is_number()) throw InputError(what + " must be a number");
    return j.get<double>();
}

bool as_bool(const json& j, const std::string& what) {
    if (!j.is_boolean()) throw InputError(what + " must be true or false");
    return j.get<bool>();
}

const json& require(const json& obj, const char* key, const std::string& where) {
    const auto it = obj.find(key);
    if (it == obj.end()) throw InputError(where + " is missing \"" + key + "\"");
    return *it;
}

void reject_unknown(const json& obj, std::initializer_list<const char*> allowed, const std::string& where) {
    const std::set<std::string> keys(allowed.begin(), allowed.end());
    for (const auto& [key, value] : obj.items()) {
        if (!keys.count(key)) throw InputError(where + " has unknown key \"" + key + "\"");
    }
}

FamilySpec parse_family(const json& j) {
    if (!j.is_object()) throw InputError("family must be an object");
    reject_unknown(j, {"kind", "max_value", "solution_bias", "label"}, "family");
    FamilySpec family;
    const json& kind = require(j, "kind", "family");
    if (!kind.is_string()) throw InputError("family.kind must be a string");
    const auto parsed = parse_family_kind(kind.get<std::string>());
    if (!parsed) throw InputError("unknown family kind \"" + kind.get<std::string>() + "\"");
    family.kind = *parsed;
    if (const auto it = j.find("max_value"); it != j.end()) {
        if (it->is_string()) {
            if (it->get<std::string>() != "2^n") throw InputError("family.max_value must be an integer or \"2^n\"");
            family.max_value_pow2_n = true;
        } else {
            family.max_value = as_uint(*it, "family.max_value");
            if (family.max_value == 0) throw InputError("family.max_value must be positive");
        }
    }
    if (const auto it = j.find("solution_bias"); it != j.end()) {
        if (!it->is_string()) throw InputError("family.solution_bias must be a string");
        const auto bias = parse_solution_bias(it->get<std::string>());
        if (!bias) throw InputError("unknown solution_bias \"" + it->get<std::string>() + "\"");
        family.bias = *bias;
    }
    if (const auto it = j.find("label"); it != j.end()) {
        if (!it->is_string()) throw InputError("family.label must be a string");
        family.label = it->get<std::string>();
    }
    return family;
}

}  // namespace

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

SspInstance parse_instance_json(std::string_view text) {
    const json j = parse_json(text);
    if (!j.is_object()) throw InputError("instance must be a JSON object");
    const json& values = require(j, "values", "instance");
    if (!values.is_array()) throw InputError("instance.values must be an array");
    std::vector<std::uint64_t> parsed;
    parsed.reserve(values.size());
    for (const auto& v : values) {
        const std::uint64_t a = as_uint(v, "instance.values entries");
        if (a == 0) throw InputError("instance.values entries must be positive");
        parsed.push_back(a);
    }
    const std::uint64_t target = as_uint(require(j, "target", "instance"), "instance.target");
    return SspInstance(std::move(parsed), target);
}

SspInstance load_instance(const std::filesystem::path& path) { return parse_instance_json(read_text_file(path)); }

std::string instance_to_json(const SspInstance& instance) {
    ordered_json j;
    j["values"] = std::vector<std::uint64_t>(instance.values().begin(), instance.values().end());
    j["target"] = instance.target();
    return j.dump();
}

SweepSpec parse_sweep_spec(std::string_view text) {
    const json j = parse_json(text);
    if (!j.is_object()) throw InputError("sweep spec must be a JSON object");
    reject_unknown(j,
                   {"experiment", "family", "families", "n_values", "trials_per_point", "reliability_target", "fixed",
                    "f0", "seed", "sample_ceiling", "record_wall_time"},
                   "sweep spec");

    SweepSpec spec;
    const json& experiment = require(j, "experiment", "sweep spec");
    if (!experiment.is_string()) throw InputError("experiment must be a string");
    const auto parsed = parse_experiment(experiment.get<std::string>());
    if (!parsed) throw InputError("unknown experiment \"" + experiment.get<std::string>() + "\"");
    spec.experiment = *parsed;

    const bool has_family = j.contains("family");
    const bool has_families = j.contains("families");
    if (has_family == has_families) throw InputError("sweep spec needs exactly one of \"family\" or \"families\"");
    if (has_family) {
        spec.families.push_back(parse_family(j["family"]));
    } else {
        if (!j["families"].is_array()) throw InputError("families must be an array");
        for (const auto& f : j["families"]) spec.families.push_back(parse_family(f));
    }

    const json& n_values = require(j, "n_values", "sweep spec");
    if (!n_values.is_array()) throw InputError("n_values must be an array");
    for (const auto& n : n_values) spec.n_values.push_back(static_cast<std::size_t>(as_uint(n, "n_values entries")));

    if (const auto it = j.find("trials_per_point"); it != j.end()) {
        spec.trials_per_point = static_cast<std::size_t>(as_uint(*it, "trials_per_point"));
    }
    if (const auto it = j.find("reliability_target"); it != j.end()) {
        spec.reliability_target = as_double(*it, "reliability_target");
    }
    if (const auto it = j.find("fixed"); it != j.end()) {
        if (!it->is_object()) throw InputError("fixed must be an object");
        reject_unknown(*it, {"noise_sigma", "sample_budget", "max_frequency_hz"}, "fixed");
        if (it->contains("noise_sigma")) spec.noise_sigma = as_double((*it)["noise_sigma"], "fixed.noise_sigma");
        if (it->contains("sample_budget")) spec.sample_budget = as_uint((*it)["sample_budget"], "fixed.sample_budget");
        if (it->contains("max_frequency_hz")) {
            spec.max_frequency_hz = as_double((*it)["max_frequency_hz"], "fixed.max_frequency_hz");
        }
    }
    if (const auto it = j.find("f0"); it != j.end()) spec.f0 = as_double(*it, "f0");
    if (const auto it = j.find("seed"); it != j.end()) spec.seed = as_uint(*it, "seed");
    if (const auto it = j.find("sample_ceiling"); it != j.end()) spec.sample_ceiling = as_uint(*it, "sample_ceiling");
    if (const auto it = j.find("record_wall_time"); it != j.end()) {
        spec.record_wall_time = as_bool(*it, "record_wall_time");
    }
    spec.validate();
    return spec;
}

SweepSpec load_sweep_spec(const std::filesystem::path& path) { return parse_sweep_spec(read_text_file(path)); }

namespace detail {

ordered_json spec_to_json(const SweepSpec& spec) {
    ordered_json j;
    j["experiment"] = std::string(to_string(spec.experiment));
    ordered_json families = ordered_json::array();
    for (const auto& f : spec.families) {
        ordered_json fj;
        fj["kind"] = std::string(to_string(f.kind));
        if (f.max_value_pow2_n) {
            fj["max_value"] = "2^n";
        } else {
            fj["max_value"] = f.max_value;
        }
        fj["solution_bias"] = std::string(to_string(f.bias));
        if (!f.label.empty()) fj["label"] = f.label;
        families.push_back(std::move(fj));
    }
    j["families"] = std::move(families);
    j["n_values"] = spec.n_values;
    j["trials_per_point"] = spec.trials_per_point;
    j["reliability_target"] = spec.reliability_target;
    ordered_json fixed = ordered_json::object();
    if (spec.noise_sigma) fixed["noise_sigma"] = *spec.noise_sigma;
    if (spec.sample_budget) fixed["sample_budget"] = *spec.sample_budget;
    if (spec.max_frequency_hz) fixed["max_frequency_hz"] = *spec.max_frequency_hz;
    j["fixed"] = std::move(fixed);
    j["f0"] = spec.f0;
    j["seed"] = spec.seed;
    j["sample_ceiling"] = spec.sample_ceiling;
    j["record_wall_time"] = spec.record_wall_time;
    return j;
}

}  // namespace detail

std::string sweep_spec_to_json(const SweepSpec& spec) { return detail::spec_to_json(spec).dump(2); }

}  // namespace ssp
