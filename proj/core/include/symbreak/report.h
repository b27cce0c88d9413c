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

#ifndef SYMBREAK_REPORT_H_
#define SYMBREAK_REPORT_H_

#include <string>
#include <string_view>

#include "symbreak/checks.h"

namespace symbreak {

enum class ReportFormat { kJson, kTsv };

// Throws ContractError unless `name` is "json" or "tsv".
ReportFormat ParseReportFormat(std::string_view name);

struct ReportOptions {
  ReportFormat format = ReportFormat::kJson;
  // Adds wall-clock time to the output, which makes it run-dependent.
  bool include_timing = false;
};

// Field order is fixed, so equal reports serialize to equal bytes.
std::string FormatReport(const VerificationReport& report,
                         const ReportOptions& options = {});

// Writes FormatReport(...) to `path`, or to stdout when path is "-" or
// empty. Throws IoError when the destination cannot be written.
void EmitReport(const VerificationReport& report, const ReportOptions& options,
                const std::string& path);

}  // namespace symbreak

#endif  // SYMBREAK_REPORT_H_
