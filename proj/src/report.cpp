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
#include "ssp/report.hpp"

#include <ostream>
#include <sstream>

#include "json.hpp"
#include "spec_json.hpp"
#include "ssp/format.hpp"

namespace ssp {

namespace {

using nlohmann::ordered_json;

constexpr const char* kCsvHeader =
    "family,n,seed,energy_fraction,min_gap_hz,bandwidth_hz,required_samples,required_duration_s,decision_accuracy,"
    "wall_time_s";

std::string field(const std::optional<double>& x) { return x ? format_double(*x) : std::string(); }

std::string samples_field(const SweepRow& row) {
    if (!row.required_samples) return {};
    return (row.censored ? ">" : "") + std::to_string(*row.required_samples);
}

std::optional<double> wall_time(const SweepReport& report, const SweepRow& row) {
    if (!report.spec.record_wall_time) return std::nullopt;
    return row.wall_time_s;
}

ordered_json optional_json(const std::optional<double>& x) { return x ? ordered_json(*x) : ordered_json(nullptr); }

void emit_csv(const SweepReport& report, std::ostream& out) {
    out << kCsvHeader << '\n';
    for (const auto& row : report.rows) {
        out << row.family << ',' << row.n << ',' << row.seed << ',' << field(row.energy_fraction) << ','
            << field(row.min_gap_hz) << ',' << field(row.bandwidth_hz) << ',' << samples_field(row) << ','
            << field(row.required_duration_s) << ',' << field(row.decision_accuracy) << ','
            << field(wall_time(report, row)) << '\n';
    }
}

void emit_json(const SweepReport& report, std::ostream& out) {
    ordered_json doc;
    doc["spec"] = detail::spec_to_json(report.spec);
    ordered_json rows = ordered_json::array();
    for (const auto& row : report.rows) {
        ordered_json r;
        r["family"] = row.family;
        r["n"] = row.n;
        r["seed"] = row.seed;
        r["energy_fraction"] = optional_json(row.energy_fraction);
        r["min_gap_hz"] = optional_json(row.min_gap_hz);
        r["bandwidth_hz"] = optional_json(row.bandwidth_hz);
        r["required_samples"] = row.required_samples ? ordered_json(*row.required_samples) : ordered_json(nullptr);
        if (row.required_samples) r["censored"] = row.censored;
        r["required_duration_s"] = optional_json(row.required_duration_s);
        r["decision_accuracy"] = optional_json(row.decision_accuracy);
        r["wall_time_s"] = optional_json(wall_time(report, row));
        rows.push_back(std::move(r));
    }
    doc["rows"] = std::move(rows);
    ordered_json fits = ordered_json::object();
    for (const auto& [label, fit] : report.fits) {
        fits[label] = {{"slope", fit.slope}, {"intercept", fit.intercept}, {"r_squared", fit.r_squared}};
    }
    doc["fit"] = std::move(fits);
    if (!report.crossover_n.empty()) {
        ordered_json crossover = ordered_json::object();
        for (const auto& [label, n] : report.crossover_n) crossover[label] = n ? ordered_json(*n) : ordered_json(nullptr);
        doc["summary"] = {{"crossover_n", std::move(crossover)}};
    }
    out << doc.dump(2) << '\n';
}

void emit_long(const SweepReport& report, std::ostream& out) {
    out << "metric,name,value\n";
    for (const auto& row : report.rows) {
        const std::string name = row.family + "/n=" + std::to_string(row.n);
        auto put = [&](const char* metric, const std::string& value) {
            if (!value.empty()) out << metric << ',' << name << ',' << value << '\n';
        };
        put("energy_fraction", field(row.energy_fraction));
        put("min_gap_hz", field(row.min_gap_hz));
        put("bandwidth_hz", field(row.bandwidth_hz));
        put("required_samples", samples_field(row));
        put("required_duration_s", field(row.required_duration_s));
        put("decision_accuracy", field(row.decision_accuracy));
        put("wall_time_s", field(wall_time(report, row)));
    }
    for (const auto& [label, fit] : report.fits) {
        out << "fit_slope," << label << ',' << format_double(fit.slope) << '\n';
        out << "fit_intercept," << label << ',' << format_double(fit.intercept) << '\n';
        out << "fit_r_squared," << label << ',' << format_double(fit.r_squared) << '\n';
    }
    for (const auto& [label, n] : report.crossover_n) {
        out << "crossover_n," << label << ',' << (n ? std::to_string(*n) : std::string()) << '\n';
    }
}

}  // namespace

std::optional<ReportFormat> parse_report_format(std::string_view text) noexcept {
    if (text == "csv") return ReportFormat::csv;
    if (text == "json") return ReportFormat::json;
    if (text == "long") return ReportFormat::long_csv;
    return std::nullopt;
}

void emit_report(const SweepReport& report, ReportFormat format, std::ostream& out) {
    switch (format) {
        case ReportFormat::csv:
            emit_csv(report, out);
            return;
        case ReportFormat::json:
            emit_json(report, out);
            return;
        case ReportFormat::long_csv:
            emit_long(report, out);
            return;
    }
}

std::string emit_report(const SweepReport& report, ReportFormat format) {
    std::ostringstream out;
    emit_report(report, format, out);
    return out.str();
}

}  // namespace ssp
