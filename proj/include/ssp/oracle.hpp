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
#ifndef SSP_ORACLE_HPP
#define SSP_ORACLE_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ssp/instance.hpp"

namespace ssp {

inline constexpr std::size_t kMaxEnumerationSize = 24;
inline constexpr std::size_t kMaxCountSize = 64;
/// Largest sum the bitset DP will allocate for (bits).
inline constexpr std::uint64_t kMaxReachableSum = std::uint64_t{1} << 31;
/// Largest effective sum the counting DP will allocate for (128-bit cells).
inline constexpr std::uint64_t kMaxCountSum = std::uint64_t{1} << 24;

/// Brute-force oracle: walks all 2^n subsets in Gray-code order.
/// Throws SizeLimitError for n > kMaxEnumerationSize.
SumMultiplicities enumerate_subset_sums(const SspInstance& instance);

/// Set of sums reachable by some subset, up to an inclusive limit.
class ReachableSet {
   public:
    ReachableSet(std::span<const std::uint64_t> values, std::uint64_t limit);

    bool contains(std::uint64_t s) const noexcept {
        return s <= limit_ && ((words_[s >> 6] >> (s & 63)) & 1u);
    }
    std::uint64_t limit() const noexcept { return limit_; }
    /// Number of reachable sums in [0, limit].
    std::uint64_t count() const noexcept;
    /// The k-th (0-based, ascending) reachable sum. Requires k < count().
    std::uint64_t nth(std::uint64_t k) const;
    /// The k-th (0-based, ascending) unreachable value in [0, limit].
    std::uint64_t nth_missing(std::uint64_t k) const;

   private:
    std::uint64_t limit_;
    std::vector<std::uint64_t> words_;
};

/// Pseudo-polynomial decision: O(n * s) time, O(s) bits. The empty subset
/// counts, so s = 0 is always YES. Targets above the total are NO at once.
bool decide_dp(std::span<const std::uint64_t> values, std::uint64_t s);

/// Exact N(s) by counting DP. Uses N(s) = N(total - s) to keep the table at
/// min(s, total - s) + 1 cells. Out-of-range s gives 0.
/// Throws SizeLimitError for n > kMaxCountSize or a table above kMaxCountSum.
Count count_dp(std::span<const std::uint64_t> values, std::uint64_t s);

}  // namespace ssp

#endif
