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
#ifndef SSP_SRC_SPEC_JSON_HPP
#define SSP_SRC_SPEC_JSON_HPP

#include "json.hpp"
#include "ssp/harness.hpp"

namespace ssp::detail {

nlohmann::ordered_json spec_to_json(const SweepSpec& spec);

}  // namespace ssp::detail

#endif
