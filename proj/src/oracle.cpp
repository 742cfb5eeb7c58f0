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
#include "ssp/oracle.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "ssp/errors.hpp"

namespace ssp {

namespace {

constexpr std::uint64_t kDenseHistogramLimit = std::uint64_t{1} << 22;

}  // namespace

SumMultiplicities enumerate_subset_sums(const SspInstance& instance) {
    const std::size_t n = instance.size();
    if (n > kMaxEnumerationSize) {
        throw SizeLimitError("enumeration is limited to n <= " + std::to_string(kMaxEnumerationSize) +
                             " (got n = " + std::to_string(n) + ")");
    }
    const auto values = instance.values();
    const std::uint64_t num_subsets = std::uint64_t{1} << n;

    SumMultiplicities out;
    out.n = n;

    // Gray-code walk: consecutive subsets differ in exactly one element.
    if (instance.total() < kDenseHistogramLimit) {
        std::vector<std::uint32_t> histogram(instance.total() + 1, 0);
        std::uint64_t sum = 0;
        std::uint64_t members = 0;
        histogram[0] = 1;
        for (std::uint64_t i = 1; i < num_subsets; ++i) {
            const int bit = std::countr_zero(i);
            const std::uint64_t mask = std::uint64_t{1} << bit;
            sum = (members & mask) ? sum - values[bit] : sum + values[bit];
            members ^= mask;
            ++histogram[sum];
        }
        for (std::uint64_t s = 0; s < histogram.size(); ++s) {
            if (histogram[s] != 0) {
                out.sums.push_back(s);
                out.counts.push_back(histogram[s]);
            }
        }
        return out;
    }

    std::vector<std::uint64_t> all(num_subsets);
    std::uint64_t sum = 0;
    std::uint64_t members = 0;
    all[0] = 0;
    for (std::uint64_t i = 1; i < num_subsets; ++i) {
        const int bit = std::countr_zero(i);
        const std::uint64_t mask = std::uint64_t{1} << bit;
        sum = (members & mask) ? sum - values[bit] : sum + values[bit];
        members ^= mask;
        all[i] = sum;
    }
    std::sort(all.begin(), all.end());
    for (std::size_t i = 0; i < all.size();) {
        std::size_t j = i;
        while (j < all.size() && all[j] == all[i]) ++j;
        out.sums.push_back(all[i]);
        out.counts.push_back(j - i);
        i = j;
    }
    return out;
}

ReachableSet::ReachableSet(std::span<const std::uint64_t> values, std::uint64_t limit) : limit_(limit) {
    if (limit >= kMaxReachableSum) {
        throw SizeLimitError("reachable-sum table limited to sums below 2^31 (got " + std::to_string(limit) + ")");
    }
    const std::size_t num_words = static_cast<std::size_t>(limit / 64 + 1);
    words_.assign(num_words, 0);
    words_[0] = 1;
    for (const std::uint64_t a : values) {
        if (a > limit) continue;
        // reachable |= reachable << a, walking from the top so each value is used once.
        const std::size_t word_shift = static_cast<std::size_t>(a / 64);
        const unsigned bit_shift = static_cast<unsigned>(a % 64);
        for (std::size_t w = num_words; w-- > word_shift;) {
            const std::size_t src = w - word_shift;
            std::uint64_t shifted = words_[src] << bit_shift;
            if (bit_shift != 0 && src > 0) shifted |= words_[src - 1] >> (64 - bit_shift);
            words_[w] |= shifted;
        }
        // Clear bits past the limit in the top word.
        const unsigned top_bits = static_cast<unsigned>(limit % 64) + 1;
        if (top_bits < 64) words_.back() &= (std::uint64_t{1} << top_bits) - 1;
    }
}

std::uint64_t ReachableSet::count() const noexcept {
    std::uint64_t total = 0;
    for (const std::uint64_t w : words_) total += static_cast<std::uint64_t>(std::popcount(w));
    return total;
}

std::uint64_t ReachableSet::nth(std::uint64_t k) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
        const auto c = static_cast<std::uint64_t>(std::popcount(words_[w]));
        if (k < c) {
            std::uint64_t word = words_[w];
            for (std::uint64_t skip = 0; skip < k; ++skip) word &= word - 1;
            return w * 64 + static_cast<std::uint64_t>(std::countr_zero(word));
        }
        k -= c;
    }
    throw std::out_of_range("ReachableSet::nth: index past the number of reachable sums");
}

std::uint64_t ReachableSet::nth_missing(std::uint64_t k) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
        std::uint64_t word = ~words_[w];
        if (w + 1 == words_.size()) {
            const unsigned top_bits = static_cast<unsigned>(limit_ % 64) + 1;
            if (top_bits < 64) word &= (std::uint64_t{1} << top_bits) - 1;
        }
        const auto c = static_cast<std::uint64_t>(std::popcount(word));
        if (k < c) {
            for (std::uint64_t skip = 0; skip < k; ++skip) word &= word - 1;
            return w * 64 + static_cast<std::uint64_t>(std::countr_zero(word));
        }
        k -= c;
    }
    throw std::out_of_range("ReachableSet::nth_missing: index past the number of unreachable values");
}

bool decide_dp(std::span<const std::uint64_t> values, std::uint64_t s) {
    std::uint64_t total = 0;
    for (const std::uint64_t a : values) {
        if (a > kMaxTotal - total) throw SizeLimitError("sum of values exceeds 2^63");
        total += a;
    }
    if (s > total) return false;
    if (s == 0 || s == total) return true;
    return ReachableSet(values, s).contains(s);
}

Count count_dp(std::span<const std::uint64_t> values, std::uint64_t s) {
    if (values.size() > kMaxCountSize) {
        throw SizeLimitError("counting is limited to n <= 64 (got n = " + std::to_string(values.size()) + ")");
    }
    std::uint64_t total = 0;
    for (const std::uint64_t a : values) {
        if (a > kMaxTotal - total) throw SizeLimitError("sum of values exceeds 2^63");
        total += a;
    }
    if (s > total) return 0;
    const std::uint64_t reduced = std::min(s, total - s);
    if (reduced > kMaxCountSum) {
        throw SizeLimitError("counting table limited to min(s, total - s) <= 2^24 (got " + std::to_string(reduced) + ")");
    }
    std::vector<Count> table(static_cast<std::size_t>(reduced) + 1, 0);
    table[0] = 1;
    for (const std::uint64_t a : values) {
        if (a > reduced) continue;
        for (std::uint64_t sigma = reduced; sigma >= a; --sigma) table[sigma] += table[sigma - a];
    }
    return table[reduced];
}

}  // namespace ssp
