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

#ifndef MANUCHECK_IU_SCHEMA_H_
#define MANUCHECK_IU_SCHEMA_H_

#include <string>
#include <string_view>
#include <vector>

#include "manucheck/doc_model.h"

namespace manucheck {

struct IUCategory {
  int id = 0;
  std::string name;
  std::string scope;
  std::string primary_location_text;  // as worded in the schema
  std::vector<SectionKind> primary_locations;
  std::string verification_notes;
  std::vector<std::string> cues;  // lower-case phrases for the rule engine
};

enum class Confidence { kHigh, kMedium, kLow };

std::string_view ConfidenceName(Confidence c);

struct CategoryAssignment {
  int category_id = 0;
  std::string rationale;
  Confidence confidence = Confidence::kLow;
};

// The 13-category classification system, immutable after load.
class IuSchema {
 public:
  const std::vector<IUCategory>& categories() const { return categories_; }
  const std::string& version() const { return version_; }

  // Error(kInvalidArgument) for ids outside 1..13.
  const IUCategory& Get(int id) const;
  bool Contains(int id) const { return id >= 1 && id <= static_cast<int>(categories_.size()); }

  // Throws Error(kSchemaCorrupt) unless there are exactly 13 categories with
  // contiguous ids, names, and at least one primary location each.
  static IuSchema FromJson(std::string_view json_text);

  // Markdown rendering used inside prompts.
  std::string RenderForPrompt() const;

  // JSON export of the full schema (same shape as the embedded asset).
  std::string ToJson() const;

 private:
  std::string version_;
  std::vector<IUCategory> categories_;
};

// The embedded schema.
const IuSchema& LoadSchema();

// Primary locations first, then the remaining IMRaD kinds in the fixed
// fallback order Results, Discussion, Methods, Introduction.
std::vector<SectionKind> CategorySearchTargets(const IUCategory& category);

}  // namespace manucheck

#endif  // MANUCHECK_IU_SCHEMA_H_
