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
#ifndef SSP_GENERATORS_HPP
#define SSP_GENERATORS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "ssp/instance.hpp"

namespace ssp {

enum class FamilyKind { all_ones, powers_of_two, random };

/// How the target is picked once the values are drawn.
///  - force_yes: uniform over the achievable sums.
///  - force_no: uniform over the unachievable values in [0, total].
///  - any: uniform over [0, total].
///  - central: floor(total / 2), the middle line.
enum class SolutionBias { force_yes, force_no, any, central };

struct FamilyParams {
    std::uint64_t max_value = 100;
    /// Random family only: draw values from [1, 2^n] instead of [1, max_value].
    bool max_value_pow2_n = false;
    std::uint64_t seed = 0;
    SolutionBias bias = SolutionBias::force_yes;
};

/// Deterministic instance generator: equal arguments give equal instances.
///
/// powers_of_two has every value in [0, 2^n - 1] achievable, so force_no
/// uses the gapped variant {1, 2, ..., 2^(n-2), 2^(n-1) + 1} with target
/// 2^(n-1). It keeps 2^n distinct sums of equal multiplicity and a line
/// spacing of one, and leaves exactly one hole, at the target.
///
/// Throws InputError for n == 0, max_value == 0, or force_no on a family
/// whose every in-range value is achievable (all_ones, or an unlucky
/// random draw).
SspInstance gen_family(FamilyKind kind, std::size_t n, const FamilyParams& params);

std::string_view to_string(FamilyKind kind) noexcept;
std::string_view to_string(SolutionBias bias) noexcept;
std::optional<FamilyKind> parse_family_kind(std::string_view text) noexcept;
std::optional<SolutionBias> parse_solution_bias(std::string_view text) noexcept;

}  // namespace ssp

#endif
