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
#ifndef SSP_INSTANCE_HPP
#define SSP_INSTANCE_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace ssp {

/// Exact subset count. Wide enough for every count over n <= 64 values,
/// including the full 2^64 subset mass.
using Count = unsigned __int128;

std::string to_string(Count c);

/// Largest admissible sum of all values.
inline constexpr std::uint64_t kMaxTotal = std::uint64_t{1} << 63;

/// A Subset Sum instance: positive integer values (repeats allowed) and a
/// nonnegative target. Construction validates; an instance object is always
/// well formed.
class SspInstance {
   public:
    /// Throws InputError for an empty list or a zero value, SizeLimitError
    /// when the values sum past kMaxTotal.
    SspInstance(std::vector<std::uint64_t> values, std::uint64_t target);

    std::span<const std::uint64_t> values() const noexcept { return values_; }
    std::uint64_t target() const noexcept { return target_; }
    std::size_t size() const noexcept { return values_.size(); }
    std::uint64_t total() const noexcept { return total_; }

    /// Whether the target lies in [0, total]; anything outside is a NO
    /// without further work.
    bool target_in_range() const noexcept { return target_ <= total_; }

    SspInstance with_target(std::uint64_t target) const;

    bool operator==(const SspInstance&) const = default;

   private:
    std::vector<std::uint64_t> values_;
    std::uint64_t target_;
    std::uint64_t total_;
};

/// N(sigma) for every achievable sum sigma, stored sparsely and sorted by sum.
struct SumMultiplicities {
    std::size_t n = 0;
    std::vector<std::uint64_t> sums;
    std::vector<Count> counts;

    /// N(s); zero for sums that are not achievable.
    Count at(std::uint64_t s) const noexcept;
    std::size_t num_lines() const noexcept { return sums.size(); }
    std::uint64_t total() const noexcept { return sums.empty() ? 0 : sums.back(); }
};

}  // namespace ssp

#endif
