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

#ifndef SYMBREAK_CHECKS_H_
#define SYMBREAK_CHECKS_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "symbreak/corpus.h"
#include "symbreak/graph.h"

namespace symbreak {

enum class TheoremId {
  kFact231,
  kFact233,
  kLemma24,
  kLemma25,
  kThm28,
  kThm33,
  kCor35,
  kLemma42,
  kLemma43,
  kLemma44,
  kThm45,
  kThm47,
  kRemark48,
};

// "fact-2.3-1", "thm-3.3", ...
std::string_view TheoremName(TheoremId id);
// Throws ContractError for unknown names.
TheoremId ParseTheoremId(std::string_view name);
const std::vector<TheoremId>& AllTheorems();

using MeasuredValue = std::variant<std::int64_t, bool, std::string>;

enum class RecordStatus {
  kPass,
  kFail,
  // The source makes claims that contradict each other on this graph; the
  // record is kept but counts neither as a pass nor as a failure.
  kPaperInconsistent,
};

std::string_view StatusName(RecordStatus status);

struct GraphRecord {
  std::string graph6;
  int order = 0;
  int max_degree = 0;
  // "corpus" for swept graphs, otherwise the name of the fixed family
  // ("star-family", "cycle-table", "sharpness").
  std::string source = "corpus";
  std::string name;  // set for fixed-family graphs, e.g. "K1,4"
  std::vector<std::pair<std::string, MeasuredValue>> values;
  RecordStatus status = RecordStatus::kPass;
  std::string note;
  std::string error;  // nonempty when evaluation threw

  void Set(std::string key, MeasuredValue value);
  const MeasuredValue* Find(std::string_view key) const;
  // Marks the record failed (keeping the first reason) unless `holds`.
  void Require(bool holds, std::string_view reason);
};

struct ReportSummary {
  int checked = 0;
  int passed = 0;
  int failed = 0;
  std::vector<std::string> counterexamples;
  std::vector<std::string> flagged;
};

struct VerificationReport {
  std::string theorem;
  std::string corpus;
  std::vector<GraphRecord> records;
  ReportSummary summary;
  double wall_seconds = 0.0;
};

// Whether g satisfies the hypotheses under which `id` is evaluated.
bool CheckApplies(TheoremId id, const Graph& g);

// Evaluates `id` on one graph. Never throws: evaluation errors land in
// record.error with status kFail.
GraphRecord EvaluateCheck(TheoremId id, const Graph& g);

// Evaluates `id` on every applicable graph of `corpus` plus the fixed
// families attached to the statement. Corpus records are ordered by graph6,
// fixed-family records follow in a fixed order. jobs <= 0 means one worker.
VerificationReport RunCheck(TheoremId id, const std::vector<Graph>& corpus,
                            std::string corpus_description, int jobs = 1);
VerificationReport RunCheck(TheoremId id, const CorpusSpec& spec,
                            int jobs = 1);

// Recomputes summary from records.
ReportSummary Summarize(const std::vector<GraphRecord>& records);

}  // namespace symbreak

#endif  // SYMBREAK_CHECKS_H_
