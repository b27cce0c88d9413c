// Copyright 2026 The symbreak Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "symbreak/report.h"

#include <fstream>
#include <iostream>
#include <sstream>

#include "json.hpp"
#include "symbreak/error.h"

namespace symbreak {
namespace {

using Json = nlohmann::ordered_json;

Json ValueToJson(const MeasuredValue& value) {
  return std::visit([](const auto& v) { return Json(v); }, value);
}

std::string ValueToText(const MeasuredValue& value) {
  if (const auto* b = std::get_if<bool>(&value)) return *b ? "true" : "false";
  if (const auto* i = std::get_if<std::int64_t>(&value)) {
    return std::to_string(*i);
  }
  return std::get<std::string>(value);
}

// Tabs and newlines would break the row structure.
std::string TsvField(std::string_view text) {
  std::string out(text);
  for (char& c : out) {
    if (c == '\t' || c == '\n' || c == '\r') c = ' ';
  }
  return out;
}

std::string FormatJson(const VerificationReport& report, bool timing) {
  Json root;
  root["theorem"] = report.theorem;
  root["corpus"] = report.corpus;
  Json summary;
  summary["checked"] = report.summary.checked;
  summary["passed"] = report.summary.passed;
  summary["failed"] = report.summary.failed;
  summary["counterexamples"] = report.summary.counterexamples;
  summary["flagged"] = report.summary.flagged;
  root["summary"] = std::move(summary);
  Json records = Json::array();
  for (const GraphRecord& r : report.records) {
    Json rec;
    rec["graph6"] = r.graph6;
    rec["n"] = r.order;
    rec["max_degree"] = r.max_degree;
    rec["source"] = r.source;
    if (!r.name.empty()) rec["name"] = r.name;
    Json values = Json::object();
    for (const auto& [key, value] : r.values) values[key] = ValueToJson(value);
    rec["values"] = std::move(values);
    rec["pass"] = r.status == RecordStatus::kPass;
    rec["status"] = std::string(StatusName(r.status));
    if (!r.note.empty()) rec["note"] = r.note;
    if (!r.error.empty()) rec["error"] = r.error;
    records.push_back(std::move(rec));
  }
  root["records"] = std::move(records);
  if (timing) root["wall_seconds"] = report.wall_seconds;
  return root.dump(2) + "\n";
}

std::string FormatTsv(const VerificationReport& report, bool timing) {
  std::ostringstream out;
  out << "# theorem=" << report.theorem << "\tcorpus=" << TsvField(report.corpus)
      << "\tchecked=" << report.summary.checked
      << "\tpassed=" << report.summary.passed
      << "\tfailed=" << report.summary.failed;
  if (timing) out << "\twall_seconds=" << report.wall_seconds;
  out << "\n";
  out << "graph6\tn\tmax_degree\tsource\tname\tstatus\tvalues\tnote\n";
  for (const GraphRecord& r : report.records) {
    std::string values;
    for (const auto& [key, value] : r.values) {
      if (!values.empty()) values += ';';
      values += key + "=" + ValueToText(value);
    }
    std::string note = r.note;
    if (!r.error.empty()) note += (note.empty() ? "" : "; ") + r.error;
    out << r.graph6 << '\t' << r.order << '\t' << r.max_degree << '\t'
        << r.source << '\t' << TsvField(r.name) << '\t' << StatusName(r.status)
        << '\t' << TsvField(values) << '\t' << TsvField(note) << '\n';
  }
  return out.str();
}

}  // namespace

ReportFormat ParseReportFormat(std::string_view name) {
  if (name == "json") return ReportFormat::kJson;
  if (name == "tsv") return ReportFormat::kTsv;
  throw ContractError("unknown report format '" + std::string(name) +
                      "' (expected json or tsv)");
}

std::string FormatReport(const VerificationReport& report,
                         const ReportOptions& options) {
  return options.format == ReportFormat::kJson
             ? FormatJson(report, options.include_timing)
             : FormatTsv(report, options.include_timing);
}

void EmitReport(const VerificationReport& report, const ReportOptions& options,
                const std::string& path) {
  const std::string text = FormatReport(report, options);
  if (path.empty() || path == "-") {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << text;
  out.flush();
  if (!out) throw IoError("failed writing '" + path + "'");
}

}  // namespace symbreak
