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

#include "manucheck/types.h"

#include "manucheck/text.h"

namespace manucheck {

std::string_view ContextModeName(ContextMode mode) {
  return mode == ContextMode::kLimited ? "limited" : "full";
}

std::optional<ContextMode> ParseContextMode(std::string_view name) {
  std::string folded = FoldCase(Trim(name));
  if (folded == "limited") return ContextMode::kLimited;
  if (folded == "full") return ContextMode::kFull;
  return std::nullopt;
}

std::string_view ReportOriginName(ReportOrigin origin) {
  return origin == ReportOrigin::kEngine ? "engine" : "model";
}

}  // namespace manucheck
