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

#ifndef MANUCHECK_GATEWAY_H_
#define MANUCHECK_GATEWAY_H_

#include <atomic>
#include <chrono>
#include <cstddef>
#include <deque>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "manucheck/doc_model.h"
#include "manucheck/types.h"

namespace manucheck {

// ---------------------------------------------------------------------------
// Prompt templates

struct PromptStep {
  std::string title;
  std::string body;
  std::string output;
};

struct PromptTemplate {
  std::string id;
  std::string provenance;
  std::vector<std::string> slots;
  std::string role;
  std::string context;
  std::vector<PromptStep> task_steps;
  std::string output_format;
  std::string final_instructions;

  // Error(kTemplateInvalid) for missing fields.
  static PromptTemplate FromJson(std::string_view json_text);

  static const PromptTemplate& Integrity();
  static const PromptTemplate& Linguistic();
  // "integrity" or "linguistic"; Error(kInvalidArgument) otherwise.
  static const PromptTemplate& Get(std::string_view id);
};

using SlotValues = std::map<std::string, std::string>;

// Blocks in the fixed order Role, Context, Task, Output Format, Final
// Instructions. Error(kTemplateInvalid) when a block is empty or the task
// has no steps; Error(kUnboundSlot) when a {{slot}} has no value.
std::string RenderPrompt(const PromptTemplate& t, const SlotValues& values);

// ---------------------------------------------------------------------------
// Backends

enum class BackendMode { kLive, kReplay, kHeuristic };

std::string_view BackendModeName(BackendMode mode);
std::optional<BackendMode> ParseBackendMode(std::string_view name);

struct BackendDescriptor {
  BackendMode mode = BackendMode::kHeuristic;
  std::string endpoint;    // live: base URL, e.g. http://host:8080/v1/chat/completions
  std::string model_name;  // live
  std::string replay_store;  // replay: directory
  double rate_limit = 0;     // requests per minute; 0 means unlimited
  std::string api_key_env = "MANUCHECK_API_KEY";
  int timeout_seconds = 120;

  // Error(kInvalidConfig) unless live has endpoint and model_name and
  // replay has replay_store.
  void Validate() const;
};

enum class ReportKind { kIntegrity, kLinguistic };
enum class AttachmentKind { kManuscript, kSection };

struct AnalysisRequest {
  std::string prompt_id;
  std::string prompt;
  std::string attachment;
  AttachmentKind attachment_kind = AttachmentKind::kManuscript;
  ReportKind kind = ReportKind::kIntegrity;
  SectionKind target = SectionKind::kConclusions;
  ContextMode context = ContextMode::kFull;
  std::size_t window = 2;
  std::size_t run_index = 0;
};

// Builds the request the workflows send: rendered prompt plus the whole
// manuscript (integrity, full context) or only the target section
// (limited context).
AnalysisRequest MakeIntegrityRequest(const Manuscript& m, SectionKind target);
AnalysisRequest MakeLinguisticRequest(const Manuscript& m, SectionKind target,
                                      ContextMode mode, std::size_t window);

struct ReportComponent {
  std::string role;
  std::string text;
  std::string status;  // "Supported" or "Unsupported"
};

struct ReportFlag {
  std::string phrase;
  std::string status;  // canonical status name
  std::optional<std::size_t> sentence;  // 0-based
  std::vector<ReportComponent> components;
};

// The flag list recovered from a formatted report.
struct StructuredReport {
  ReportKind kind = ReportKind::kIntegrity;
  std::vector<ReportFlag> flags;

  // Flag phrases plus the text of every Unsupported component.
  std::vector<std::string> Phrases() const;
};

struct RunMetadata {
  std::string timestamp;  // empty for deterministic backends
  std::string backend;
  std::string prompt_id;
  std::string model_name;
  std::size_t run_index = 0;
};

struct ModelOutput {
  std::string raw_text;
  std::optional<StructuredReport> parsed;
  RunMetadata metadata;
};

class Backend {
 public:
  virtual ~Backend() = default;
  virtual BackendMode mode() const = 0;
  // Must be safe to call concurrently.
  virtual ModelOutput Execute(const AnalysisRequest& request) = 0;
};

// Serves recorded outputs from a directory holding manifest.json and
// run_000.txt, run_001.txt, ...
class ReplayBackend : public Backend {
 public:
  // Error(kIoFailure) when the manifest is missing or unreadable.
  explicit ReplayBackend(std::string store_dir);

  BackendMode mode() const override { return BackendMode::kReplay; }

  // Output recorded for request.run_index; Error(kReplayExhausted) past the
  // end, Error(kBackendFailure) when the store was recorded for another
  // prompt.
  ModelOutput Execute(const AnalysisRequest& request) override;

  std::size_t size() const { return runs_.size(); }
  const std::string& prompt_id() const { return prompt_id_; }
  const std::string& model_name() const { return model_name_; }

  // Claims the next unused run index; Error(kReplayExhausted) when none left.
  std::size_t Next();

 private:
  std::string dir_;
  std::string prompt_id_;
  std::string model_name_;
  std::vector<std::string> runs_;  // file names
  std::atomic<std::size_t> cursor_{0};
};

// Sliding one-minute window shared by concurrent callers. Acquire blocks
// until a slot is free, so excess requests are delayed rather than dropped.
class RateLimiter {
 public:
  using Clock = std::function<std::chrono::steady_clock::time_point()>;
  using Sleeper = std::function<void(std::chrono::steady_clock::duration)>;

  explicit RateLimiter(double per_minute, Clock clock = nullptr,
                       Sleeper sleeper = nullptr);

  // Returns the time spent waiting.
  std::chrono::steady_clock::duration Acquire();

 private:
  std::size_t capacity_;
  Clock clock_;
  Sleeper sleeper_;
  std::mutex mu_;
  std::deque<std::chrono::steady_clock::time_point> stamps_;
};

// Generic chat-completion exchange: one stateless POST per run carrying a
// single user message (prompt followed by the attachment).
class LiveBackend : public Backend {
 public:
  explicit LiveBackend(BackendDescriptor descriptor,
                       std::shared_ptr<RateLimiter> limiter = nullptr);

  BackendMode mode() const override { return BackendMode::kLive; }
  ModelOutput Execute(const AnalysisRequest& request) override;

 private:
  BackendDescriptor descriptor_;
  std::shared_ptr<RateLimiter> limiter_;
};

// Validates the descriptor and constructs the matching backend.
std::unique_ptr<Backend> MakeBackend(const BackendDescriptor& descriptor);

// ---------------------------------------------------------------------------
// Output parsing

// Reads the "Flagged Items" list of a formatted report. Error(kParseFailure)
// on empty text, a missing heading, an empty list without "None", or a
// bullet without a quoted phrase or status.
StructuredReport ParseStructuredText(std::string_view text, ReportKind kind);
StructuredReport ParseStructuredOutput(const ModelOutput& output,
                                       ReportKind kind);

}  // namespace manucheck

#endif  // MANUCHECK_GATEWAY_H_
