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

#include "manucheck/error.h"

namespace manucheck {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNoHeadingsFound: return "NoHeadingsFound";
    case ErrorCode::kSectionNotFound: return "SectionNotFound";
    case ErrorCode::kSchemaCorrupt: return "SchemaCorrupt";
    case ErrorCode::kLexiconCorrupt: return "LexiconCorrupt";
    case ErrorCode::kNoImradContent: return "NoImradContent";
    case ErrorCode::kClauseParseFailure: return "ClauseParseFailure";
    case ErrorCode::kContextMismatch: return "ContextMismatch";
    case ErrorCode::kUnboundSlot: return "UnboundSlot";
    case ErrorCode::kTemplateInvalid: return "TemplateInvalid";
    case ErrorCode::kBackendFailure: return "BackendFailure";
    case ErrorCode::kNetworkFailure: return "NetworkFailure";
    case ErrorCode::kReplayExhausted: return "ReplayExhausted";
    case ErrorCode::kRateLimited: return "RateLimited";
    case ErrorCode::kParseFailure: return "ParseFailure";
    case ErrorCode::kEmptySeries: return "EmptySeries";
    case ErrorCode::kInvalidConfig: return "InvalidConfig";
    case ErrorCode::kIoFailure: return "IoFailure";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

bool IsBackendFailure(ErrorCode code) {
  return code == ErrorCode::kBackendFailure ||
         code == ErrorCode::kNetworkFailure ||
         code == ErrorCode::kReplayExhausted ||
         code == ErrorCode::kRateLimited;
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
      code_(code) {}

}  // namespace manucheck
