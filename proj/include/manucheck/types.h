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

#ifndef MANUCHECK_TYPES_H_
#define MANUCHECK_TYPES_H_

#include <cstddef>
#include <optional>
#include <string_view>

#include "manucheck/doc_model.h"

namespace manucheck {

// Limited: only the summary section is supplied. Full: the whole manuscript.
enum class ContextMode { kLimited, kFull };

std::string_view ContextModeName(ContextMode mode);
std::optional<ContextMode> ParseContextMode(std::string_view name);

// Whether a report was computed by the rule engine (full unit/verdict detail)
// or reconstructed from a model's formatted output (flags only).
enum class ReportOrigin { kEngine, kModel };

std::string_view ReportOriginName(ReportOrigin origin);

struct SentenceRef {
  SectionKind section = SectionKind::kOther;
  std::size_t index = 0;

  friend bool operator==(const SentenceRef&, const SentenceRef&) = default;
};

}  // namespace manucheck

#endif  // MANUCHECK_TYPES_H_
