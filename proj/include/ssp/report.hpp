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
#ifndef SSP_REPORT_HPP
#define SSP_REPORT_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "ssp/harness.hpp"

namespace ssp {

enum class ReportFormat { csv, json, long_csv };

std::optional<ReportFormat> parse_report_format(std::string_view text) noexcept;

/// csv: header family,n,seed,energy_fraction,min_gap_hz,bandwidth_hz,
///      required_samples,required_duration_s,decision_accuracy,wall_time_s
///      then one line per row; unmeasured fields are empty, censored sample
///      counts print as ">ceiling".
/// json: one object {spec, rows, fit[, summary]}.
/// long_csv: metric,name,value triples for plotting tools.
///
/// wall_time_s is only filled when the spec asks for it, so reports of the
/// same spec are byte-identical by default.
void emit_report(const SweepReport& report, ReportFormat format, std::ostream& out);
std::string emit_report(const SweepReport& report, ReportFormat format);

}  // namespace ssp

#endif
