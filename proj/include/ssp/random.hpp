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

#ifndef SSP_RANDOM_HPP
#define SSP_RANDOM_HPP

#include <cstdint>
#include <utility>

#include <boost/random/normal_distribution.hpp>

namespace ssp {

/// SplitMix64 (Steele, Lea & Flood 2014). Every random draw in the library
/// goes through this generator and the transforms below. The standard library
/// distributions are avoided because their output differs between vendors;
/// Boost's ziggurat normal is one fixed algorithm wherever it is built.
class SplitMix64 {
   public:
    using result_type = std::uint64_t;

    explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return ~result_type{0}; }
    constexpr result_type operator()() noexcept { return next(); }

    constexpr std::uint64_t next() noexcept {
        state_ += 0x9E3779B97F4A7C15ull;
        return mix(state_);
    }

    static constexpr std::uint64_t mix(std::uint64_t z) noexcept {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [lo, hi], unbiased (rejection on the top remainder).
    std::uint64_t uniform_int(std::uint64_t lo, std::uint64_t hi) noexcept {
        const std::uint64_t span = hi - lo;
        if (span == ~std::uint64_t{0}) return next();
        const std::uint64_t range = span + 1;
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % range);
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return lo + x % range;
    }

    /// Two independent standard normals (ziggurat).
    std::pair<double, double> normal_pair() {
        boost::random::normal_distribution<double> normal;
        const double z1 = normal(*this);
        return {z1, normal(*this)};
    }

   private:
    std::uint64_t state_;
};

/// Seed of the independent stream number `index` under `seed`. Used to give
/// every trial its own generator so serial and parallel runs draw the same
/// numbers.
constexpr std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index) noexcept {
    return SplitMix64::mix(SplitMix64::mix(seed) ^ SplitMix64::mix(index * 0xD1B54A32D192ED03ull + 0x8CB92BA72F3D8DD7ull));
}

constexpr std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t i, std::uint64_t j) noexcept {
    return stream_seed(stream_seed(seed, i), j);
}

}  // namespace ssp

#endif
