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
#include "ssp/generators.hpp"

#include <string>
#include <vector>

#include "ssp/errors.hpp"
#include "ssp/oracle.hpp"
#include "ssp/random.hpp"

namespace ssp {

namespace {

std::uint64_t pick_target(const std::vector<std::uint64_t>& values, std::uint64_t total, SolutionBias bias,
                          SplitMix64& rng) {
    switch (bias) {
        case SolutionBias::any:
            return rng.uniform_int(0, total);
        case SolutionBias::central:
            return total / 2;
        case SolutionBias::force_yes: {
            const ReachableSet reachable(values, total);
            return reachable.nth(rng.uniform_int(0, reachable.count() - 1));
        }
        case SolutionBias::force_no: {
            const ReachableSet reachable(values, total);
            const std::uint64_t missing = total + 1 - reachable.count();
            if (missing == 0) throw InputError("force_no impossible: every value in [0, total] is achievable");
            return reachable.nth_missing(rng.uniform_int(0, missing - 1));
        }
    }
    return 0;
}

}  // namespace

SspInstance gen_family(FamilyKind kind, std::size_t n, const FamilyParams& params) {
    if (n == 0) throw InputError("family size n must be at least 1");
    SplitMix64 rng(params.seed);
    std::vector<std::uint64_t> values;
    values.reserve(n);

    switch (kind) {
        case FamilyKind::all_ones: {
            values.assign(n, 1);
            if (params.bias == SolutionBias::force_no) {
                throw InputError("force_no impossible for all_ones: every value in [0, n] is achievable");
            }
            if (params.bias == SolutionBias::force_yes) return SspInstance(values, rng.uniform_int(0, n));
            break;
        }
        case FamilyKind::powers_of_two: {
            if (n > 63) throw SizeLimitError("powers_of_two is limited to n <= 63");
            for (std::size_t j = 0; j < n; ++j) values.push_back(std::uint64_t{1} << j);
            if (params.bias == SolutionBias::force_no) {
                values.back() += 1;
                return SspInstance(values, values.back() - 1);
            }
            if (params.bias == SolutionBias::force_yes) {
                const std::uint64_t top = values.back() * 2 - 1;
                return SspInstance(values, rng.uniform_int(0, top));
            }
            break;
        }
        case FamilyKind::random: {
            std::uint64_t max_value = params.max_value;
            if (params.max_value_pow2_n) {
                if (n > 62) throw SizeLimitError("random family with max_value = 2^n is limited to n <= 62");
                max_value = std::uint64_t{1} << n;
            }
            if (max_value == 0) throw InputError("max_value must be at least 1");
            for (std::size_t j = 0; j < n; ++j) values.push_back(rng.uniform_int(1, max_value));
            break;
        }
    }

    const SspInstance shape(values, 0);
    const std::uint64_t target = pick_target(values, shape.total(), params.bias, rng);
    return SspInstance(std::move(values), target);
}

std::string_view to_string(FamilyKind kind) noexcept {
    switch (kind) {
        case FamilyKind::all_ones:
            return "all_ones";
        case FamilyKind::powers_of_two:
            return "powers_of_two";
        case FamilyKind::random:
            return "random";
    }
    return "?";
}

std::string_view to_string(SolutionBias bias) noexcept {
    switch (bias) {
        case SolutionBias::force_yes:
            return "force_yes";
        case SolutionBias::force_no:
            return "force_no";
        case SolutionBias::any:
            return "any";
        case SolutionBias::central:
            return "central";
    }
    return "?";
}

std::optional<FamilyKind> parse_family_kind(std::string_view text) noexcept {
    for (auto k : {FamilyKind::all_ones, FamilyKind::powers_of_two, FamilyKind::random}) {
        if (text == to_string(k)) return k;
    }
    return std::nullopt;
}

std::optional<SolutionBias> parse_solution_bias(std::string_view text) noexcept {
    for (auto b : {SolutionBias::force_yes, SolutionBias::force_no, SolutionBias::any, SolutionBias::central}) {
        if (text == to_string(b)) return b;
    }
    return std::nullopt;
}

}  // namespace ssp
