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

#include <gtest/gtest.h>

#include <chrono>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

#include "httplib.h"
#include "json.hpp"
#include "manucheck/error.h"
#include "manucheck/heuristic.h"
#include "manucheck/assets.h"
#include "manucheck/iu_schema.h"
#include "test_util.h"

namespace manucheck {
namespace {

using nlohmann::json;
using testing::FixturePath;
using testing::GroundTruth;

std::string Golden(const std::string& name) {
  std::ifstream in(std::string(MANUCHECK_GOLDEN) + "/" + name, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

ErrorCode CodeOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::kInvalidArgument;
}

// --- templates ---------------------------------------------------------------

TEST(PromptTemplate, ShippedTemplatesHaveFiveBlocks) {
  for (const PromptTemplate* t : {&PromptTemplate::Integrity(), &PromptTemplate::Linguistic()}) {
    EXPECT_FALSE(t->role.empty());
    EXPECT_FALSE(t->context.empty());
    EXPECT_FALSE(t->task_steps.empty());
    EXPECT_FALSE(t->output_format.empty());
    EXPECT_FALSE(t->final_instructions.empty());
    EXPECT_EQ(t->provenance, "reconstructed");
    EXPECT_EQ(&PromptTemplate::Get(t->id), t);
  }
  EXPECT_THROW(PromptTemplate::Get("nope"), Error);
}

TEST(RenderPrompt, BlocksInOrder) {
  std::string p = RenderPrompt(PromptTemplate::Integrity(),
                               {{"target_section", "Conclusions"},
                                {"iu_schema", LoadSchema().RenderForPrompt()}});
  std::size_t role = p.find("# Role"), context = p.find("# Context"), task = p.find("# Task"),
              format = p.find("# Output Format"), final_i = p.find("# Final Instructions");
  ASSERT_NE(final_i, std::string::npos);
  EXPECT_EQ(role, 0u);
  EXPECT_LT(role, context);
  EXPECT_LT(context, task);
  EXPECT_LT(task, format);
  EXPECT_LT(format, final_i);
  EXPECT_EQ(p.find("{{"), std::string::npos);
}

TEST(RenderPrompt, MatchesGoldenFiles) {
  EXPECT_EQ(RenderPrompt(PromptTemplate::Integrity(),
                         {{"target_section", "Conclusions"},
                          {"iu_schema", LoadSchema().RenderForPrompt()}}),
            Golden("integrity_conclusions.txt"));
  EXPECT_EQ(RenderPrompt(PromptTemplate::Linguistic(),
                         {{"target_section", "Abstract"}, {"window", "3"}}),
            Golden("linguistic_abstract_w3.txt"));
}

TEST(RenderPrompt, UnboundSlot) {
  EXPECT_EQ(CodeOf([] { RenderPrompt(PromptTemplate::Linguistic(), {{"window", "2"}}); }),
            ErrorCode::kUnboundSlot);
}

TEST(PromptTemplate, EmptyBlockIsInvalid) {
  json j = json::parse(assets::LinguisticPromptJson());
  j["role"] = "";
  EXPECT_EQ(CodeOf([&] {
              RenderPrompt(PromptTemplate::FromJson(j.dump()),
                           {{"target_section", "Abstract"}, {"window", "2"}});
            }),
            ErrorCode::kTemplateInvalid);
  json k = json::parse(assets::LinguisticPromptJson());
  k["task_steps"] = json::array();
  EXPECT_EQ(CodeOf([&] {
              RenderPrompt(PromptTemplate::FromJson(k.dump()),
                           {{"target_section", "Abstract"}, {"window", "2"}});
            }),
            ErrorCode::kTemplateInvalid);
}

TEST(MakeRequests, AttachmentDependsOnContext) {
  Manuscript m = GroundTruth();
  AnalysisRequest full = MakeLinguisticRequest(m, SectionKind::kConclusions, ContextMode::kFull, 2);
  AnalysisRequest lim = MakeLinguisticRequest(m, SectionKind::kConclusions, ContextMode::kLimited, 2);
  EXPECT_EQ(full.attachment, m.raw_text);
  EXPECT_EQ(lim.attachment.rfind("## Conclusions\n\n", 0), 0u);
  EXPECT_EQ(lim.attachment.find("## Methods"), std::string::npos);
  EXPECT_EQ(full.prompt, lim.prompt);
  AnalysisRequest integ = MakeIntegrityRequest(m, SectionKind::kConclusions);
  EXPECT_EQ(integ.prompt_id, "integrity");
  EXPECT_EQ(integ.attachment, m.raw_text);
}

// --- descriptors -------------------------------------------------------------

TEST(BackendDescriptor, Validation) {
  BackendDescriptor live;
  live.mode = BackendMode::kLive;
  EXPECT_EQ(CodeOf([&] { live.Validate(); }), ErrorCode::kInvalidConfig);
  live.endpoint = "http://localhost:1/v1";
  EXPECT_EQ(CodeOf([&] { live.Validate(); }), ErrorCode::kInvalidConfig);
  live.model_name = "m";
  EXPECT_NO_THROW(live.Validate());
  BackendDescriptor replay;
  replay.mode = BackendMode::kReplay;
  EXPECT_EQ(CodeOf([&] { replay.Validate(); }), ErrorCode::kInvalidConfig);
  BackendDescriptor heuristic;
  EXPECT_NO_THROW(heuristic.Validate());
}

// --- replay ------------------------------------------------------------------

AnalysisRequest IntegrityRequest(std::size_t run) {
  AnalysisRequest r = MakeIntegrityRequest(GroundTruth(), SectionKind::kConclusions);
  r.run_index = run;
  return r;
}

TEST(ReplayBackend, ServesRunsByIndex) {
  ReplayBackend b(FixturePath("replay/integrity_gemini"));
  EXPECT_EQ(b.size(), 20u);
  EXPECT_EQ(b.prompt_id(), "integrity");
  ModelOutput o = b.Execute(IntegrityRequest(3));
  EXPECT_EQ(o.metadata.run_index, 3u);
  EXPECT_EQ(o.metadata.backend, "replay");
  EXPECT_TRUE(o.parsed.has_value());
  EXPECT_EQ(b.Execute(IntegrityRequest(3)).raw_text, o.raw_text);
}

TEST(ReplayBackend, Exhaustion) {
  ReplayBackend b(FixturePath("replay/integrity_gemini"));
  EXPECT_EQ(CodeOf([&] { b.Execute(IntegrityRequest(20)); }), ErrorCode::kReplayExhausted);
}

TEST(ReplayBackend, PromptMismatch) {
  ReplayBackend b(FixturePath("replay/linguistic_gemini_a_full"));
  EXPECT_EQ(CodeOf([&] { b.Execute(IntegrityRequest(0)); }), ErrorCode::kBackendFailure);
}

TEST(ReplayBackend, MissingStore) {
  EXPECT_EQ(CodeOf([] { ReplayBackend b(FixturePath("replay/does_not_exist")); }),
            ErrorCode::kIoFailure);
}

TEST(ReplayBackend, NextIsAtomic) {
  ReplayBackend b(FixturePath("replay/integrity_gemini"));
  std::vector<std::thread> threads;
  std::vector<std::size_t> got(8);
  for (int t = 0; t < 8; ++t) {
    threads.emplace_back([&, t] { got[t] = b.Next(); });
  }
  for (auto& th : threads) th.join();
  std::sort(got.begin(), got.end());
  for (std::size_t i = 0; i < got.size(); ++i) EXPECT_EQ(got[i], i);
}

// --- heuristic ---------------------------------------------------------------

TEST(HeuristicBackend, StatelessAndParseable) {
  HeuristicBackend b;
  for (ContextMode mode : {ContextMode::kLimited, ContextMode::kFull}) {
    AnalysisRequest r = MakeLinguisticRequest(GroundTruth(), SectionKind::kConclusions, mode, 2);
    ModelOutput a = b.Execute(r);
    ModelOutput c = b.Execute(r);
    EXPECT_EQ(a.raw_text, c.raw_text);
    ASSERT_TRUE(a.parsed.has_value());
    EXPECT_NO_THROW(ParseStructuredText(a.raw_text, ReportKind::kLinguistic));
  }
  ModelOutput i = b.Execute(IntegrityRequest(0));
  ASSERT_TRUE(i.parsed.has_value());
  EXPECT_EQ(i.parsed->flags.size(), 2u);
}

// --- rate limiter ------------------------------------------------------------

TEST(RateLimiter, SlidingWindowWithFakeClock) {
  using namespace std::chrono;
  steady_clock::time_point now{};
  std::vector<steady_clock::duration> sleeps;
  RateLimiter limiter(
      2, [&] { return now; },
      [&](steady_clock::duration d) {
        sleeps.push_back(d);
        now += d;
      });
  EXPECT_EQ(limiter.Acquire(), steady_clock::duration::zero());
  now += seconds(10);
  EXPECT_EQ(limiter.Acquire(), steady_clock::duration::zero());
  now += seconds(5);
  // Third call waits until the first stamp leaves the window at t=60 s.
  EXPECT_EQ(limiter.Acquire(), seconds(45));
  ASSERT_EQ(sleeps.size(), 1u);
  // Fourth waits until the second stamp (t=10 s) expires.
  EXPECT_EQ(limiter.Acquire(), seconds(10));
}

TEST(RateLimiter, ZeroMeansUnlimited) {
  int sleeps = 0;
  RateLimiter limiter(0, nullptr, [&](auto) { ++sleeps; });
  for (int i = 0; i < 100; ++i) limiter.Acquire();
  EXPECT_EQ(sleeps, 0);
}

// --- live --------------------------------------------------------------------

class LiveServer {
 public:
  explicit LiveServer(std::function<void(const httplib::Request&, httplib::Response&)> h) {
    server_.Post("/v1/chat/completions", std::move(h));
    port_ = server_.bind_to_any_port("127.0.0.1");
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }
  ~LiveServer() {
    server_.stop();
    thread_.join();
  }
  std::string endpoint() const {
    return "http://127.0.0.1:" + std::to_string(port_) + "/v1/chat/completions";
  }

 private:
  httplib::Server server_;
  int port_ = 0;
  std::thread thread_;
};

BackendDescriptor LiveDescriptor(const std::string& endpoint) {
  BackendDescriptor d;
  d.mode = BackendMode::kLive;
  d.endpoint = endpoint;
  d.model_name = "test-model";
  d.api_key_env = "MANUCHECK_TEST_KEY";
  d.timeout_seconds = 5;
  return d;
}

TEST(LiveBackend, ChatCompletionExchange) {
  setenv("MANUCHECK_TEST_KEY", "secret", 1);
  json seen;
  std::string auth;
  LiveServer server([&](const httplib::Request& req, httplib::Response& res) {
    seen = json::parse(req.body);
    auth = req.get_header_value("Authorization");
    json reply = {{"choices",
                   {{{"message",
                      {{"role", "assistant"},
                       {"content", "## Flagged Items\n\n- \"90 mL of H₂¹⁷O\" -- Unsubstantiated\n"}}}}}}};
    res.set_content(reply.dump(), "application/json");
  });
  LiveBackend backend(LiveDescriptor(server.endpoint()));
  AnalysisRequest req = IntegrityRequest(0);
  ModelOutput out = backend.Execute(req);
  EXPECT_EQ(seen["model"], "test-model");
  ASSERT_EQ(seen["messages"].size(), 1u);
  EXPECT_EQ(seen["messages"][0]["role"], "user");
  const std::string content = seen["messages"][0]["content"];
  EXPECT_EQ(content.rfind(req.prompt, 0), 0u);
  EXPECT_NE(content.find(req.attachment), std::string::npos);
  EXPECT_EQ(auth, "Bearer secret");
  ASSERT_TRUE(out.parsed.has_value());
  EXPECT_EQ(out.parsed->flags.at(0).phrase, "90 mL of H₂¹⁷O");
  EXPECT_FALSE(out.metadata.timestamp.empty());
  EXPECT_EQ(out.metadata.model_name, "test-model");
}

TEST(LiveBackend, PlainTextReply) {
  LiveServer server([](const httplib::Request&, httplib::Response& res) {
    res.set_content("## Flagged Items\n\nNone\n", "text/plain");
  });
  LiveBackend backend(LiveDescriptor(server.endpoint()));
  ModelOutput out = backend.Execute(IntegrityRequest(0));
  ASSERT_TRUE(out.parsed.has_value());
  EXPECT_TRUE(out.parsed->flags.empty());
}

TEST(LiveBackend, HttpErrors) {
  int status = 429;
  LiveServer server([&](const httplib::Request&, httplib::Response& res) {
    res.status = status;
    res.set_content("busy", "text/plain");
  });
  LiveBackend backend(LiveDescriptor(server.endpoint()));
  EXPECT_EQ(CodeOf([&] { backend.Execute(IntegrityRequest(0)); }), ErrorCode::kRateLimited);
  status = 503;
  EXPECT_EQ(CodeOf([&] { backend.Execute(IntegrityRequest(0)); }), ErrorCode::kNetworkFailure);
  EXPECT_TRUE(IsBackendFailure(ErrorCode::kRateLimited));
  EXPECT_TRUE(IsBackendFailure(ErrorCode::kNetworkFailure));
}

TEST(LiveBackend, UnreachableEndpoint) {
  std::string endpoint;
  {
    LiveServer server([](const httplib::Request&, httplib::Response&) {});
    endpoint = server.endpoint();
  }
  LiveBackend backend(LiveDescriptor(endpoint));
  EXPECT_EQ(CodeOf([&] { backend.Execute(IntegrityRequest(0)); }), ErrorCode::kNetworkFailure);
}

// --- structured output parsing ------------------------------------------------

TEST(ParseStructuredText, IntegrityBullets) {
  StructuredReport r = ParseStructuredText(
      "Some preamble.\n\n## Flagged Items\n\n"
      "- \"40-fold enriched water\" \xE2\x80\x94 unsubstantiated (not stated)\n"
      "2. “90 mL of H₂¹⁷O” -- Partially Substantiated\n",
      ReportKind::kIntegrity);
  ASSERT_EQ(r.flags.size(), 2u);
  EXPECT_EQ(r.flags[0].phrase, "40-fold enriched water");
  EXPECT_EQ(r.flags[0].status, "Unsubstantiated");
  EXPECT_EQ(r.flags[1].phrase, "90 mL of H₂¹⁷O");
  EXPECT_EQ(r.flags[1].status, "Partially Substantiated");
}

TEST(ParseStructuredText, NoneMeansClean) {
  StructuredReport r = ParseStructuredText("## Flagged Items\n\nNone\n", ReportKind::kIntegrity);
  EXPECT_TRUE(r.flags.empty());
  EXPECT_TRUE(r.Phrases().empty());
}

TEST(ParseStructuredText, LinguisticComponents) {
  StructuredReport r = ParseStructuredText(
      "**Flagged Items**\n\n- \"This\" (sentence 5) -- Ambiguous\n"
      "  - concept: \"power of NMR\" -- Unsupported\n"
      "  - *scope_modifier*: \"detection of reactions\" -- Supported\n"
      "  - action: \"illustrates\"\n",
      ReportKind::kLinguistic);
  ASSERT_EQ(r.flags.size(), 1u);
  EXPECT_EQ(r.flags[0].sentence, 4u);
  ASSERT_EQ(r.flags[0].components.size(), 3u);
  EXPECT_EQ(r.flags[0].components[1].role, "scope_modifier");
  EXPECT_EQ(r.flags[0].components[1].status, "Supported");
  EXPECT_EQ(r.flags[0].components[2].status, "Unsupported");
  // Supported components are not phrases the report flags.
  EXPECT_EQ(r.Phrases(), (std::vector<std::string>{"This", "power of NMR", "illustrates"}));
}

TEST(ParseStructuredText, Failures) {
  for (const char* text : {"", "The section looks fine overall.", "## Flagged Items\n\n",
                           "## Flagged Items\n\n- \"x\" -- maybe\n"}) {
    EXPECT_EQ(CodeOf([&] { ParseStructuredText(text, ReportKind::kIntegrity); }),
              ErrorCode::kParseFailure)
        << text;
  }
}

TEST(ParseStructuredText, ReplayStoresAllParseOrFailCleanly) {
  for (const char* store : {"integrity_chatgpt", "integrity_gemini"}) {
    ReplayBackend b(FixturePath(std::string("replay/") + store));
    std::size_t parsed = 0;
    for (std::size_t i = 0; i < b.size(); ++i) parsed += b.Execute(IntegrityRequest(i)).parsed.has_value();
    EXPECT_GE(parsed, b.size() - 1);
  }
}

}  // namespace
}  // namespace manucheck
