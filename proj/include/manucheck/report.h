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

#ifndef MANUCHECK_REPORT_H_
#define MANUCHECK_REPORT_H_

#include <optional>
#include <string>
#include <string_view>

#include "manucheck/doc_model.h"
#include "manucheck/integrity.h"
#include "manucheck/linguistic.h"

namespace manucheck {

enum class OutputFormat { kText, kJson };

std::optional<OutputFormat> ParseOutputFormat(std::string_view name);

// Human-readable renderings. Both end with a "## Flagged Items" list in the
// format the prompts request, so they parse back with ParseStructuredText.
std::string RenderIntegrityText(const IntegrityReport& report);
std::string RenderLinguisticText(const LinguisticReport& report);
std::string RenderSectionsText(const Manuscript& m);

// Pretty-printed JSON with a stable key order.
std::string IntegrityReportJson(const IntegrityReport& report);
std::string LinguisticReportJson(const LinguisticReport& report);
std::string SectionsJson(const Manuscript& m);

}  // namespace manucheck

#endif  // MANUCHECK_REPORT_H_
