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
// Reference computations used only by tests. Deliberately naive and written
// without the library's algorithms.

#ifndef SSP_TESTS_TEST_ORACLES_HPP
#define SSP_TESTS_TEST_ORACLES_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <numbers>
#include <vector>

#include "ssp/random.hpp"

namespace ssp::oracles {

/// N(sigma) by plain recursion over include/exclude choices.
inline void recurse_counts(const std::vector<std::uint64_t>& values, std::size_t j, std::uint64_t sum,
                           std::map<std::uint64_t, std::uint64_t>& out) {
    if (j == values.size()) {
        ++out[sum];
        return;
    }
    recurse_counts(values, j + 1, sum, out);
    recurse_counts(values, j + 1, sum + values[j], out);
}

inline std::map<std::uint64_t, std::uint64_t> brute_force_counts(const std::vector<std::uint64_t>& values) {
    std::map<std::uint64_t, std::uint64_t> out;
    recurse_counts(values, 0, 0, out);
    return out;
}

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

/// sum_sigma N(sigma) / 2^n exp(i 2 pi sigma f0 t), in long double.
inline std::complex<long double> line_sum(const std::map<std::uint64_t, std::uint64_t>& counts, std::size_t n,
                                          double f0, double t) {
    std::complex<long double> g = 0;
    const long double scale = std::ldexp(1.0L, -static_cast<int>(n));
    for (const auto& [sigma, c] : counts) {
        long double cycles = static_cast<long double>(sigma) * f0 * t;
        cycles -= std::floor(cycles);
        const long double phase = 2.0L * std::numbers::pi_v<long double> * cycles;
        g += std::complex<long double>(std::cos(phase), std::sin(phase)) * (scale * static_cast<long double>(c));
    }
    return g;
}

/// Direct DFT bin in long double with an exact rational phase k * num / den.
inline std::complex<long double> dft_bin(const std::vector<std::complex<double>>& x, std::uint64_t num,
                                         std::uint64_t den) {
    std::complex<long double> acc = 0;
    for (std::size_t k = 0; k < x.size(); ++k) {
        const std::uint64_t idx = (static_cast<unsigned __int128>(k) * num) % den;
        const long double phase = -2.0L * std::numbers::pi_v<long double> * idx / den;
        acc += std::complex<long double>(x[k].real(), x[k].imag()) *
               std::complex<long double>(std::cos(phase), std::sin(phase));
    }
    return acc / static_cast<long double>(x.size());
}

inline std::vector<std::uint64_t> random_values(SplitMix64& rng, std::size_t n, std::uint64_t max_value) {
    std::vector<std::uint64_t> v(n);
    for (auto& a : v) a = rng.uniform_int(1, max_value);
    return v;
}

}  // namespace ssp::oracles

#endif
