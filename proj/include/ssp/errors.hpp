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

#ifndef SSP_ERRORS_HPP
#define SSP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ssp {

/// Malformed or out-of-contract input (bad JSON, non-positive values, ...).
class InputError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// A size guard was hit: enumeration too large, sum overflow, DP table too big.
class SizeLimitError : public std::length_error {
   public:
    using std::length_error::length_error;
};

/// A physically meaningless configuration: sampling below the line bandwidth,
/// non-positive base frequency, ADC depth out of range.
class ConfigError : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

}  // namespace ssp

#endif
