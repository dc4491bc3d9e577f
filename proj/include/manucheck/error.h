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

#ifndef MANUCHECK_ERROR_H_
#define MANUCHECK_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace manucheck {

enum class ErrorCode {
  kNoHeadingsFound,
  kSectionNotFound,
  kSchemaCorrupt,
  kLexiconCorrupt,
  kNoImradContent,
  kClauseParseFailure,
  kContextMismatch,
  kUnboundSlot,
  kTemplateInvalid,
  kBackendFailure,
  kNetworkFailure,
  kReplayExhausted,
  kRateLimited,
  kParseFailure,
  kEmptySeries,
  kInvalidConfig,
  kIoFailure,
  kInvalidArgument,
};

std::string_view ErrorCodeName(ErrorCode code);

// True for the failures an analysis backend can raise while executing.
bool IsBackendFailure(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace manucheck

#endif  // MANUCHECK_ERROR_H_
