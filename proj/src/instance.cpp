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
#include "ssp/instance.hpp"

#include <algorithm>
#include <utility>

#include "ssp/errors.hpp"

namespace ssp {

std::string to_string(Count c) {
    if (c == 0) return "0";
    std::string out;
    while (c != 0) {
        out.push_back(static_cast<char>('0' + static_cast<int>(c % 10)));
        c /= 10;
    }
    std::reverse(out.begin(), out.end());
    return out;
}

SspInstance::SspInstance(std::vector<std::uint64_t> values, std::uint64_t target)
    : values_(std::move(values)), target_(target), total_(0) {
    if (values_.empty()) throw InputError("instance needs at least one value");
    for (const std::uint64_t a : values_) {
        if (a == 0) throw InputError("instance values must be positive");
        if (a > kMaxTotal - total_) throw SizeLimitError("sum of values exceeds 2^63");
        total_ += a;
    }
}

SspInstance SspInstance::with_target(std::uint64_t target) const {
    SspInstance copy = *this;
    copy.target_ = target;
    return copy;
}

Count SumMultiplicities::at(std::uint64_t s) const noexcept {
    const auto it = std::lower_bound(sums.begin(), sums.end(), s);
    if (it == sums.end() || *it != s) return 0;
    return counts[static_cast<std::size_t>(it - sums.begin())];
}

}  // namespace ssp
