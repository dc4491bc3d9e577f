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

#include "manucheck/gateway.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>
#include <thread>

#include "httplib.h"
#include "json.hpp"
#include "manucheck/assets.h"
#include "manucheck/error.h"
#include "manucheck/heuristic.h"
#include "manucheck/iu_schema.h"
#include "manucheck/text.h"

namespace manucheck {
namespace {

using nlohmann::json;
namespace fs = std::filesystem;

std::string RequiredString(const json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end() || !it->is_string() || it->get<std::string>().empty()) {
    throw Error(ErrorCode::kTemplateInvalid,
                std::string("template field '") + key + "' missing or empty");
  }
  return it->get<std::string>();
}

std::string FillSlots(std::string_view text, const SlotValues& values) {
  std::string out;
  std::size_t pos = 0;
  while (true) {
    std::size_t open = text.find("{{", pos);
    if (open == std::string_view::npos) break;
    std::size_t close = text.find("}}", open + 2);
    if (close == std::string_view::npos) break;
    std::string name(Trim(text.substr(open + 2, close - open - 2)));
    auto it = values.find(name);
    if (it == values.end()) {
      throw Error(ErrorCode::kUnboundSlot, "no value for slot '" + name + "'");
    }
    out.append(text.substr(pos, open - pos));
    out += it->second;
    pos = close + 2;
  }
  out.append(text.substr(pos));
  return out;
}

void RequireBlock(const std::string& text, const char* name) {
  if (Trim(text).empty()) {
    throw Error(ErrorCode::kTemplateInvalid,
                std::string("template block '") + name + "' is empty");
  }
}

std::string ReadFile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoFailure, "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string UtcTimestamp() {
  std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::optional<StructuredReport> TryParse(std::string_view text, ReportKind kind) {
  try {
    return ParseStructuredText(text, kind);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kParseFailure) throw;
    return std::nullopt;
  }
}

// ---- structured output parsing

std::string Fold(std::string_view s) { return FoldCase(s); }

std::size_t Indent(std::string_view line) {
  std::size_t n = 0;
  for (char c : line) {
    if (c == ' ') {
      n += 1;
    } else if (c == '\t') {
      n += 4;
    } else {
      break;
    }
  }
  return n;
}

bool IsHeadingLine(std::string_view t) {
  return !t.empty() && t.front() == '#';
}

bool IsFlaggedHeading(std::string_view t) {
  std::string folded = Fold(t);
  if (folded.find("flagged") == std::string::npos) return false;
  bool markup = IsHeadingLine(t) || folded.rfind("**", 0) == 0 ||
                (!folded.empty() && folded.back() == ':');
  return markup || folded.size() <= 40;
}

// Strips a bullet marker; returns false when the line is not a bullet.
bool StripBullet(std::string_view t, std::string_view* content) {
  static const std::string_view kBullet = "\xE2\x80\xA2";
  if (t.size() >= 2 && (t[0] == '-' || t[0] == '*' || t[0] == '+') && t[1] == ' ') {
    *content = Trim(t.substr(2));
    return true;
  }
  if (t.rfind(kBullet, 0) == 0) {
    *content = Trim(t.substr(kBullet.size()));
    return true;
  }
  std::size_t i = 0;
  while (i < t.size() && t[i] >= '0' && t[i] <= '9') ++i;
  if (i > 0 && i + 1 < t.size() && (t[i] == '.' || t[i] == ')') && t[i + 1] == ' ') {
    *content = Trim(t.substr(i + 2));
    return true;
  }
  return false;
}

// First double-quoted phrase (straight or curly); `rest` receives the text
// after the closing quote.
std::optional<std::string> Quoted(std::string_view s, std::string_view* rest) {
  static const std::string_view kOpen = "\xE2\x80\x9C", kClose = "\xE2\x80\x9D";
  std::size_t straight = s.find('"');
  std::size_t curly = s.find(kOpen);
  if (straight == std::string_view::npos && curly == std::string_view::npos) {
    return std::nullopt;
  }
  std::size_t begin, end;
  if (curly == std::string_view::npos || (straight != std::string_view::npos && straight < curly)) {
    begin = straight + 1;
    end = s.find('"', begin);
    if (end == std::string_view::npos) return std::nullopt;
    *rest = s.substr(end + 1);
  } else {
    begin = curly + kOpen.size();
    end = s.find(kClose, begin);
    if (end == std::string_view::npos) return std::nullopt;
    *rest = s.substr(end + kClose.size());
  }
  std::string phrase(Trim(s.substr(begin, end - begin)));
  if (phrase.empty()) return std::nullopt;
  return phrase;
}

std::string IntegrityStatus(std::string_view rest) {
  std::string f = Fold(rest);
  if (f.find("partially substantiated") != std::string::npos ||
      f.find("partially-substantiated") != std::string::npos) {
    return "Partially Substantiated";
  }
  if (f.find("unsubstantiated") != std::string::npos ||
      f.find("not substantiated") != std::string::npos) {
    return "Unsubstantiated";
  }
  return "";
}

std::string ComponentStatus(std::string_view rest) {
  std::string f = Fold(rest);
  if (f.find("unsupported") != std::string::npos ||
      f.find("not supported") != std::string::npos) {
    return "Unsupported";
  }
  if (f.find("supported") != std::string::npos) return "Supported";
  return "Unsupported";
}

}  // namespace

// ---------------------------------------------------------------------------

PromptTemplate PromptTemplate::FromJson(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kTemplateInvalid, e.what());
  }
  PromptTemplate t;
  t.id = RequiredString(doc, "id");
  t.provenance = doc.value("provenance", "");
  if (doc.contains("slots")) {
    for (const auto& s : doc["slots"]) t.slots.push_back(s.get<std::string>());
  }
  t.role = RequiredString(doc, "role");
  t.context = RequiredString(doc, "context");
  t.output_format = RequiredString(doc, "output_format");
  t.final_instructions = RequiredString(doc, "final_instructions");
  if (!doc.contains("task_steps") || !doc["task_steps"].is_array()) {
    throw Error(ErrorCode::kTemplateInvalid, "template has no task_steps");
  }
  for (const auto& s : doc["task_steps"]) {
    t.task_steps.push_back(PromptStep{RequiredString(s, "title"),
                                      RequiredString(s, "body"),
                                      s.value("output", "")});
  }
  return t;
}

const PromptTemplate& PromptTemplate::Integrity() {
  static const PromptTemplate t = FromJson(assets::IntegrityPromptJson());
  return t;
}

const PromptTemplate& PromptTemplate::Linguistic() {
  static const PromptTemplate t = FromJson(assets::LinguisticPromptJson());
  return t;
}

const PromptTemplate& PromptTemplate::Get(std::string_view id) {
  if (id == "integrity") return Integrity();
  if (id == "linguistic") return Linguistic();
  throw Error(ErrorCode::kInvalidArgument, "unknown prompt '" + std::string(id) + "'");
}

std::string RenderPrompt(const PromptTemplate& t, const SlotValues& values) {
  RequireBlock(t.role, "role");
  RequireBlock(t.context, "context");
  RequireBlock(t.output_format, "output_format");
  RequireBlock(t.final_instructions, "final_instructions");
  if (t.task_steps.empty()) {
    throw Error(ErrorCode::kTemplateInvalid, "template block 'task' is empty");
  }
  std::string out;
  out += "# Role\n\n" + FillSlots(t.role, values) + "\n\n";
  out += "# Context\n\n" + FillSlots(t.context, values) + "\n\n";
  out += "# Task\n";
  for (std::size_t i = 0; i < t.task_steps.size(); ++i) {
    const PromptStep& s = t.task_steps[i];
    RequireBlock(s.body, "task step");
    out += "\n## Step " + std::to_string(i + 1) + ": " + FillSlots(s.title, values) +
           "\n\n" + FillSlots(s.body, values) + "\n";
    if (!s.output.empty()) out += "\nOutput: " + FillSlots(s.output, values) + "\n";
  }
  out += "\n# Output Format\n\n" + FillSlots(t.output_format, values) + "\n\n";
  out += "# Final Instructions\n\n" + FillSlots(t.final_instructions, values) + "\n";
  return out;
}

std::string_view BackendModeName(BackendMode mode) {
  switch (mode) {
    case BackendMode::kLive: return "live";
    case BackendMode::kReplay: return "replay";
    case BackendMode::kHeuristic: return "heuristic";
  }
  return "heuristic";
}

std::optional<BackendMode> ParseBackendMode(std::string_view name) {
  std::string folded = FoldCase(Trim(name));
  for (BackendMode m : {BackendMode::kLive, BackendMode::kReplay, BackendMode::kHeuristic}) {
    if (BackendModeName(m) == folded) return m;
  }
  return std::nullopt;
}

void BackendDescriptor::Validate() const {
  if (mode == BackendMode::kLive && (endpoint.empty() || model_name.empty())) {
    throw Error(ErrorCode::kInvalidConfig, "live backend needs endpoint and model_name");
  }
  if (mode == BackendMode::kReplay && replay_store.empty()) {
    throw Error(ErrorCode::kInvalidConfig, "replay backend needs replay_store");
  }
  if (rate_limit < 0 || !std::isfinite(rate_limit)) {
    throw Error(ErrorCode::kInvalidConfig, "rate_limit must be >= 0");
  }
  if (timeout_seconds <= 0) {
    throw Error(ErrorCode::kInvalidConfig, "timeout must be positive");
  }
}

AnalysisRequest MakeIntegrityRequest(const Manuscript& m, SectionKind target) {
  AnalysisRequest r;
  r.prompt_id = "integrity";
  r.prompt = RenderPrompt(PromptTemplate::Integrity(),
                          {{"target_section", std::string(SectionKindName(target))},
                           {"iu_schema", LoadSchema().RenderForPrompt()}});
  r.attachment = m.raw_text;
  r.attachment_kind = AttachmentKind::kManuscript;
  r.kind = ReportKind::kIntegrity;
  r.target = target;
  r.context = ContextMode::kFull;
  return r;
}

AnalysisRequest MakeLinguisticRequest(const Manuscript& m, SectionKind target,
                                      ContextMode mode, std::size_t window) {
  AnalysisRequest r;
  r.prompt_id = "linguistic";
  r.prompt = RenderPrompt(PromptTemplate::Linguistic(),
                          {{"target_section", std::string(SectionKindName(target))},
                           {"window", std::to_string(window)}});
  if (mode == ContextMode::kLimited) {
    const Section& s = LocateSection(m, target);
    r.attachment = "## " + std::string(SectionKindName(target)) + "\n\n" + s.body + "\n";
    r.attachment_kind = AttachmentKind::kSection;
  } else {
    r.attachment = m.raw_text;
    r.attachment_kind = AttachmentKind::kManuscript;
  }
  r.kind = ReportKind::kLinguistic;
  r.target = target;
  r.context = mode;
  r.window = window;
  return r;
}

std::vector<std::string> StructuredReport::Phrases() const {
  std::vector<std::string> out;
  for (const ReportFlag& f : flags) {
    out.push_back(f.phrase);
    for (const ReportComponent& c : f.components) {
      if (c.status == "Unsupported") out.push_back(c.text);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

ReplayBackend::ReplayBackend(std::string store_dir) : dir_(std::move(store_dir)) {
  fs::path manifest = fs::path(dir_) / "manifest.json";
  json doc;
  try {
    doc = json::parse(ReadFile(manifest));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kIoFailure, manifest.string() + ": " + e.what());
  }
  prompt_id_ = doc.value("prompt_id", "");
  model_name_ = doc.value("model_name", "");
  std::size_t count = doc.value("run_count", 0);
  for (std::size_t i = 0; i < count; ++i) {
    char name[32];
    std::snprintf(name, sizeof(name), "run_%03zu.txt", i);
    if (!fs::exists(fs::path(dir_) / name)) {
      throw Error(ErrorCode::kIoFailure,
                  "replay store " + dir_ + " is missing " + name);
    }
    runs_.push_back(name);
  }
}

ModelOutput ReplayBackend::Execute(const AnalysisRequest& request) {
  if (!request.prompt_id.empty() && !prompt_id_.empty() &&
      request.prompt_id != prompt_id_) {
    throw Error(ErrorCode::kBackendFailure,
                "replay store " + dir_ + " was recorded for prompt '" +
                    prompt_id_ + "', not '" + request.prompt_id + "'");
  }
  if (request.run_index >= runs_.size()) {
    throw Error(ErrorCode::kReplayExhausted,
                "run index " + std::to_string(request.run_index) +
                    " requested; store holds " + std::to_string(runs_.size()) +
                    " runs");
  }
  ModelOutput out;
  out.raw_text = ReadFile(fs::path(dir_) / runs_[request.run_index]);
  out.parsed = TryParse(out.raw_text, request.kind);
  out.metadata = RunMetadata{"", "replay", request.prompt_id, model_name_,
                             request.run_index};
  return out;
}

std::size_t ReplayBackend::Next() {
  std::size_t i = cursor_.fetch_add(1);
  if (i >= runs_.size()) {
    throw Error(ErrorCode::kReplayExhausted,
                "all " + std::to_string(runs_.size()) + " recorded runs used");
  }
  return i;
}

// ---------------------------------------------------------------------------

RateLimiter::RateLimiter(double per_minute, Clock clock, Sleeper sleeper)
    : capacity_(per_minute <= 0 ? 0 : std::max<std::size_t>(1, static_cast<std::size_t>(per_minute))),
      clock_(clock ? std::move(clock) : Clock([] { return std::chrono::steady_clock::now(); })),
      sleeper_(sleeper ? std::move(sleeper)
                       : Sleeper([](std::chrono::steady_clock::duration d) {
                           std::this_thread::sleep_for(d);
                         })) {}

std::chrono::steady_clock::duration RateLimiter::Acquire() {
  using namespace std::chrono;
  steady_clock::duration waited{0};
  if (capacity_ == 0) return waited;
  std::lock_guard<std::mutex> lock(mu_);
  while (true) {
    steady_clock::time_point now = clock_();
    while (!stamps_.empty() && stamps_.front() + minutes(1) <= now) stamps_.pop_front();
    if (stamps_.size() < capacity_) {
      stamps_.push_back(now);
      return waited;
    }
    steady_clock::duration wait = stamps_.front() + minutes(1) - now;
    sleeper_(wait);
    waited += wait;
  }
}

LiveBackend::LiveBackend(BackendDescriptor descriptor,
                         std::shared_ptr<RateLimiter> limiter)
    : descriptor_(std::move(descriptor)), limiter_(std::move(limiter)) {
  descriptor_.Validate();
  if (!limiter_) limiter_ = std::make_shared<RateLimiter>(descriptor_.rate_limit);
}

ModelOutput LiveBackend::Execute(const AnalysisRequest& request) {
  static const std::regex kUrl(R"(^(https?://[^/]+)(/.*)?$)");
  std::smatch match;
  if (!std::regex_match(descriptor_.endpoint, match, kUrl)) {
    throw Error(ErrorCode::kInvalidConfig, "bad endpoint '" + descriptor_.endpoint + "'");
  }
  std::string base = match[1];
  std::string path = match[2].matched ? std::string(match[2]) : "/";

  json body = {
      {"model", descriptor_.model_name},
      {"messages", json::array({{{"role", "user"},
                                 {"content", request.prompt + "\n\n# Attachment\n\n" +
                                                 request.attachment}}})},
  };
  httplib::Headers headers;
  if (const char* key = std::getenv(descriptor_.api_key_env.c_str()); key && *key) {
    headers.emplace("Authorization", std::string("Bearer ") + key);
  }

  limiter_->Acquire();
  httplib::Client client(base);
  client.set_connection_timeout(descriptor_.timeout_seconds, 0);
  client.set_read_timeout(descriptor_.timeout_seconds, 0);
  client.set_write_timeout(descriptor_.timeout_seconds, 0);
  auto res = client.Post(path, headers, body.dump(), "application/json");
  if (!res) {
    throw Error(ErrorCode::kNetworkFailure,
                "request to " + descriptor_.endpoint + " failed: " +
                    httplib::to_string(res.error()));
  }
  if (res->status == 429) {
    throw Error(ErrorCode::kRateLimited, "endpoint answered 429");
  }
  if (res->status < 200 || res->status >= 300) {
    throw Error(ErrorCode::kNetworkFailure,
                "endpoint answered HTTP " + std::to_string(res->status));
  }

  ModelOutput out;
  out.raw_text = res->body;
  json reply = json::parse(res->body, nullptr, /*allow_exceptions=*/false);
  if (reply.is_object() && reply.contains("choices")) {
    try {
      out.raw_text = reply.at("choices").at(0).at("message").at("content").get<std::string>();
    } catch (const json::exception& e) {
      throw Error(ErrorCode::kBackendFailure,
                  std::string("malformed completion response: ") + e.what());
    }
  }
  out.parsed = TryParse(out.raw_text, request.kind);
  out.metadata = RunMetadata{UtcTimestamp(), "live", request.prompt_id,
                             descriptor_.model_name, request.run_index};
  return out;
}

std::unique_ptr<Backend> MakeBackend(const BackendDescriptor& descriptor) {
  descriptor.Validate();
  switch (descriptor.mode) {
    case BackendMode::kLive: return std::make_unique<LiveBackend>(descriptor);
    case BackendMode::kReplay:
      return std::make_unique<ReplayBackend>(descriptor.replay_store);
    case BackendMode::kHeuristic: return std::make_unique<HeuristicBackend>();
  }
  return std::make_unique<HeuristicBackend>();
}

// ---------------------------------------------------------------------------

StructuredReport ParseStructuredText(std::string_view text, ReportKind kind) {
  if (Trim(text).empty()) {
    throw Error(ErrorCode::kParseFailure, "empty model output");
  }
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    pos = nl + 1;
  }

  std::optional<std::size_t> heading;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (IsFlaggedHeading(Trim(lines[i]))) heading = i;
  }
  if (!heading) {
    throw Error(ErrorCode::kParseFailure, "no 'Flagged Items' heading");
  }

  static const std::regex kSentence(R"(sentence\s+(\d+))", std::regex::icase);
  StructuredReport report;
  report.kind = kind;
  bool none = false;
  for (std::size_t i = *heading + 1; i < lines.size(); ++i) {
    std::string_view t = Trim(lines[i]);
    if (t.empty()) continue;
    if (IsHeadingLine(t)) break;
    std::string_view content;
    if (!StripBullet(t, &content)) {
      std::string bare;
      for (char c : Fold(t)) {
        if (std::isalpha(static_cast<unsigned char>(c))) bare.push_back(c);
      }
      if (report.flags.empty() && bare == "none") none = true;
      continue;  // wrapped prose
    }
    bool nested = Indent(lines[i]) >= 2 && !report.flags.empty();
    if (nested) {
      if (kind != ReportKind::kLinguistic) continue;
      std::string_view rest;
      auto phrase = Quoted(content, &rest);
      if (!phrase) {
        throw Error(ErrorCode::kParseFailure,
                    "component without a quoted phrase: " + std::string(t));
      }
      std::string role;
      std::size_t colon = content.find(':');
      std::size_t quote = content.find_first_of("\"\xE2");
      if (colon != std::string_view::npos && colon < quote) {
        std::string_view r = Trim(content.substr(0, colon));
        while (!r.empty() && (r.front() == '*' || r.front() == '_')) r.remove_prefix(1);
        while (!r.empty() && (r.back() == '*' || r.back() == '_')) r.remove_suffix(1);
        role = FoldCase(r);
        std::replace(role.begin(), role.end(), ' ', '_');
      }
      report.flags.back().components.push_back(
          ReportComponent{role, *phrase, ComponentStatus(rest)});
      continue;
    }
    std::string_view rest;
    auto phrase = Quoted(content, &rest);
    if (!phrase) {
      throw Error(ErrorCode::kParseFailure,
                  "flag without a quoted phrase: " + std::string(t));
    }
    ReportFlag flag;
    flag.phrase = *phrase;
    if (kind == ReportKind::kIntegrity) {
      flag.status = IntegrityStatus(rest);
      if (flag.status.empty()) {
        throw Error(ErrorCode::kParseFailure,
                    "flag without a status: " + std::string(t));
      }
    } else {
      if (Fold(rest).find("ambiguous") == std::string::npos) {
        throw Error(ErrorCode::kParseFailure,
                    "pronoun flag without 'Ambiguous': " + std::string(t));
      }
      flag.status = "Ambiguous";
      std::string tail(rest);
      std::smatch m;
      if (std::regex_search(tail, m, kSentence)) {
        std::size_t n = std::stoul(m[1]);
        if (n > 0) flag.sentence = n - 1;
      }
    }
    report.flags.push_back(std::move(flag));
  }
  if (report.flags.empty() && !none) {
    throw Error(ErrorCode::kParseFailure,
                "flag list is empty and does not say 'None'");
  }
  return report;
}

StructuredReport ParseStructuredOutput(const ModelOutput& output, ReportKind kind) {
  return ParseStructuredText(output.raw_text, kind);
}

}  // namespace manucheck
