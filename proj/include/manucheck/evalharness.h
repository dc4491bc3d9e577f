// Copyright 2026 The manucheck Authors.
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

#ifndef MANUCHECK_EVALHARNESS_H_
#define MANUCHECK_EVALHARNESS_H_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "manucheck/doc_model.h"
#include "manucheck/gateway.h"
#include "manucheck/types.h"

namespace manucheck {

// A phrase pattern over flagged phrases. Keys are case-folded lemmas with
// stopwords dropped; contiguous criteria need the keys side by side,
// others only in order.
struct TargetCriterion {
  std::string id;
  std::vector<std::string> keys;
  bool contiguous = false;
  std::string description;

  bool Matches(std::string_view phrase) const;

  static TargetCriterion FromPhrase(std::string id, std::string_view phrase,
                                    bool contiguous = false);
  // "90mL", "40fold", "detection-of-reactions", "power-of-NMR".
  static std::optional<TargetCriterion> BuiltIn(std::string_view id);
};

enum class ScoringMode { kPrimary, kPerTarget };

std::string_view ScoringModeName(ScoringMode mode);

struct SeriesConfig {
  std::string label;
  std::string prompt_id = "integrity";
  ContextMode context = ContextMode::kFull;
  std::size_t runs = 0;
  BackendDescriptor backend;
  std::vector<TargetCriterion> criteria;
  std::string primary;  // criterion id; defaults to the first criterion
  ScoringMode scoring = ScoringMode::kPrimary;
  std::string attachment;  // manuscript path
  SectionKind target = SectionKind::kConclusions;
  std::size_t window = 2;
  std::map<std::size_t, std::string> exclusions;  // run index -> reason
  std::size_t fan_out = 1;

  // Error(kEmptySeries) for runs == 0; Error(kInvalidConfig) for missing
  // criteria, an unknown primary or an exclusion past the last run.
  void Validate() const;
  const std::string& PrimaryCriterion() const;
};

struct HarnessConfig {
  std::string output_dir;
  std::vector<SeriesConfig> series;
};

// Key-value file: global keys, then one [section] per series. Relative
// paths resolve against the config file's directory.
HarnessConfig LoadHarnessConfig(const std::string& path);
HarnessConfig ParseHarnessConfig(std::string_view text, const std::string& base_dir);

struct RunRecord {
  std::size_t run_index = 0;
  std::string timestamp;
  std::string output_ref;  // relative to the series directory
  bool parsed = false;
  std::string error;
  std::map<std::string, bool> hits;
  std::optional<std::string> excluded;
};

// hit[c] is true iff some flagged phrase matches c. A missing report (parse
// failure) scores all false.
std::map<std::string, bool> ScoreRun(const std::optional<StructuredReport>& report,
                                     const std::vector<TargetCriterion>& criteria);

// Executes cfg.runs isolated runs, writing series.json, runs.jsonl and
// outputs/run_NNN.txt under `series_dir`. Backend failures abort the series
// after the completed records are persisted.
std::vector<RunRecord> RunSeries(const SeriesConfig& cfg, const std::string& series_dir);
std::vector<RunRecord> RunSeries(const SeriesConfig& cfg, Backend& backend,
                                 const std::string& series_dir);

// Integer-exact round half up to the nearest multiple of 5 percent.
int RoundToFive(std::size_t successes, std::size_t runs);

struct SuccessRow {
  std::string series;
  std::string context;
  std::size_t runs = 0;
  std::size_t successes = 0;
  std::size_t failures = 0;
  int rate_display = 0;

  double rate_exact() const {
    return runs == 0 ? 0.0 : static_cast<double>(successes) / runs;
  }
  friend bool operator==(const SuccessRow&, const SuccessRow&) = default;
};

struct SuccessTable {
  std::vector<SuccessRow> rows;
  friend bool operator==(const SuccessTable&, const SuccessTable&) = default;
};

// Excluded records are left out of every count. Error(kEmptySeries) when no
// record remains.
SuccessRow Summarize(std::string series, ContextMode context,
                     const std::vector<RunRecord>& records,
                     const std::string& criterion);

// One row per series (primary scoring) or one row per criterion labelled
// "label [criterion]" (per-target scoring).
std::vector<SuccessRow> SummarizeSeries(const SeriesConfig& cfg,
                                        const std::vector<RunRecord>& records);

enum class TableFormat { kCsv, kJson, kText };

std::optional<TableFormat> ParseTableFormat(std::string_view name);

// Error(kInvalidArgument) for an empty table.
std::string FormatTable(const SuccessTable& table, TableFormat format);
SuccessTable TableFromJson(std::string_view json_text);
// Error(kIoFailure) when the file cannot be written.
void ExportTable(const SuccessTable& table, TableFormat format, const std::string& path);

// Rebuilds rows from a series directory written by RunSeries.
std::vector<SuccessRow> ReportSeries(const std::string& series_dir);
std::vector<RunRecord> LoadRunRecords(const std::string& series_dir);

// Runs every series into <output_dir>/<SeriesDirName>/ and writes table.csv,
// table.json and table.txt to output_dir.
SuccessTable RunHarness(const HarnessConfig& config);

std::string SeriesSlug(std::string_view label);
// Slug of label plus context, e.g. "a-limited".
std::string SeriesDirName(const SeriesConfig& cfg);

}  // namespace manucheck

#endif  // MANUCHECK_EVALHARNESS_H_
