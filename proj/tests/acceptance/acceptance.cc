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


// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// non-zero if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"
#include "manucheck/doc_model.h"
#include "manucheck/error.h"
#include "manucheck/evalharness.h"
#include "manucheck/heuristic.h"
#include "manucheck/integrity.h"
#include "manucheck/iu_schema.h"
#include "manucheck/linguistic.h"
#include "manucheck/report.h"

namespace fs = std::filesystem;
using namespace manucheck;

namespace {

using Clock = std::chrono::steady_clock;

std::string Fixture(const std::string& rel) { return std::string(MANUCHECK_FIXTURES) + "/" + rel; }

std::string Read(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

Manuscript GroundTruth() {
  return ParseManuscript(Read(Fixture("ground_truth_manuscript.md")), {});
}

const std::set<std::string> kIntegrityTruth = {"40-fold enriched water", "90 mL of H₂¹⁷O"};
const char kConcept[] = "power of ¹⁷O NMR";
const char kScope[] = "detection of the reactions of O-containing functional groups";

double Seconds(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

// Each check returns an empty string on success, otherwise the reason.
using Check = std::function<std::string()>;

std::string IntegrityGroundTruth() {
  auto t0 = Clock::now();
  IntegrityReport r = HeuristicIntegrity(GroundTruth(), SectionKind::kConclusions);
  double secs = Seconds(t0);
  auto v = r.FlaggedPhrases();
  std::set<std::string> got(v.begin(), v.end());
  if (got != kIntegrityTruth || got.size() != v.size()) return "flag set differs";
  for (const std::string& f : v) {
    if (f.find("500 mL") != std::string::npos) return "500 mL flagged";
  }
  bool found500 = false;
  for (const UnitResult& u : r.units) {
    if (u.unit.text == "500 mL") {
      found500 = true;
      if (u.verdict.status != VerificationStatus::kSubstantiated) return "500 mL not substantiated";
    }
  }
  if (!found500) return "no 500 mL unit";
  if (secs >= 1.0) return "took " + std::to_string(secs) + " s";
  return "";
}

std::string CheckPronounFlag(const LinguisticReport& r) {
  if (r.flags.size() != 1) return std::to_string(r.flags.size()) + " flags";
  const PronounFlag& f = r.flags[0];
  if (f.pronoun != "This") return "flagged '" + f.pronoun + "'";
  bool concept_ok = false, scope_ok = false;
  for (const FlaggedComponent& c : f.components) {
    if (c.status != SupportStatus::kUnsupported) continue;
    concept_ok |= c.role == ComponentRole::kConcept && c.text == kConcept;
    scope_ok |= c.role == ComponentRole::kScopeModifier && c.text == kScope;
  }
  if (!concept_ok) return "concept not Unsupported";
  if (!scope_ok) return "scope modifier not Unsupported";
  for (const AmbiguityFinding& a : r.findings) {
    if (a.pronoun.lexeme == "This" && a.verdict != AmbiguityVerdict::kAmbiguous) {
      return "verdict not Ambiguous";
    }
  }
  return "";
}

std::string LinguisticGroundTruth() {
  for (ContextMode mode : {ContextMode::kLimited, ContextMode::kFull}) {
    std::string why = CheckPronounFlag(
        HeuristicLinguistic(GroundTruth(), SectionKind::kConclusions, mode));
    if (!why.empty()) return std::string(ContextModeName(mode)) + ": " + why;
  }
  return "";
}

std::string NoFalsePositives() {
  Manuscript m = GroundTruth();
  for (SectionKind target : {SectionKind::kAbstract, SectionKind::kConclusions}) {
    IntegrityReport ir = HeuristicIntegrity(m, target);
    for (const std::string& f : ir.FlaggedPhrases()) {
      if (target != SectionKind::kConclusions || !kIntegrityTruth.count(f)) {
        return "extra integrity flag '" + f + "'";
      }
    }
    for (ContextMode mode : {ContextMode::kLimited, ContextMode::kFull}) {
      LinguisticReport lr = HeuristicLinguistic(m, target, mode);
      for (const PronounFlag& f : lr.flags) {
        if (target != SectionKind::kConclusions || f.pronoun != "This" || f.sentence != 4u) {
          return "extra pronoun flag '" + f.pronoun + "'";
        }
        for (const FlaggedComponent& c : f.components) {
          bool expected = c.role == ComponentRole::kAction ||
                          (c.role == ComponentRole::kConcept && c.text == kConcept) ||
                          (c.role == ComponentRole::kScopeModifier && c.text == kScope);
          if (!expected) return "extra component '" + c.text + "'";
        }
      }
    }
  }
  return "";
}

// Expected rows: series, context, runs, successes, printed rate.
struct Row {
  std::string series;
  std::string context;
  std::size_t runs, successes;
  int display;
};

std::string TableReproduction() {
  const std::vector<std::pair<std::string, std::vector<Row>>> tables = {
      {"integrity_replay.ini",
       {{"ChatGPT [90mL]", "Full", 20, 19, 95},
        {"ChatGPT [40fold]", "Full", 20, 0, 0},
        {"Gemini [90mL]", "Full", 20, 19, 95},
        {"Gemini [40fold]", "Full", 20, 19, 95}}},
      {"pronouns_model_a.ini",
       {{"B", "Limited", 20, 20, 100}, {"A", "Full", 19, 17, 90}, {"B", "Full", 20, 16, 80}}},
      {"pronouns_model_b.ini",
       {{"A", "Limited", 21, 12, 55},
        {"B", "Limited", 40, 14, 35},
        {"C", "Limited", 40, 21, 55},
        {"A", "Full", 20, 14, 70},
        {"B", "Full", 40, 34, 85},
        {"C", "Full", 40, 35, 90}}},
  };
  fs::path out = fs::temp_directory_path() / "manucheck_acceptance_tables";
  fs::remove_all(out);
  auto t0 = Clock::now();
  for (const auto& [file, rows] : tables) {
    HarnessConfig cfg = LoadHarnessConfig(Fixture("eval/" + file));
    cfg.output_dir = (out / file).string();
    SuccessTable t = RunHarness(cfg);
    if (t.rows.size() != rows.size()) return file + ": row count";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const SuccessRow& g = t.rows[i];
      const Row& w = rows[i];
      if (g.series != w.series || g.context != w.context || g.runs != w.runs ||
          g.successes != w.successes || g.failures != w.runs - w.successes ||
          g.rate_display != w.display) {
        return file + ": row " + std::to_string(i) + " is " + g.series + " " + g.context + " " +
               std::to_string(g.successes) + "/" + std::to_string(g.runs) + " " +
               std::to_string(g.rate_display) + "%";
      }
      if (g.rate_exact() != static_cast<double>(w.successes) / static_cast<double>(w.runs)) {
        return file + ": exact rate";
      }
    }
    // The exported table must carry the same numbers.
    if (TableFromJson(Read(out / file / "table.json")) != t) return file + ": export differs";
  }
  double secs = Seconds(t0);
  fs::remove_all(out);
  if (secs >= 5.0) return "took " + std::to_string(secs) + " s";
  return "";
}

std::string SchemaSuite() {
  using K = SectionKind;
  const std::vector<std::pair<std::string, std::vector<K>>> want = {
      {"Background, Aim, and Problem Statement", {K::kIntroduction}},
      {"Statement of Core Methodology", {K::kMethods}},
      {"Methodological Highlight (Pivotal Aspect)", {K::kMethods, K::kResults}},
      {"Key Finding / Main Result", {K::kResults}},
      {"Subsidiary Finding / Secondary Result", {K::kResults}},
      {"Interpretation of Finding(s)", {K::kDiscussion}},
      {"Answer to Research Question / Resolution of Hypothesis", {K::kDiscussion}},
      {"Comparison with Existing Literature / Contextualization", {K::kDiscussion, K::kIntroduction}},
      {"Statement of Broader Significance / Impact", {K::kDiscussion}},
      {"Practical Application / Recommendation", {K::kDiscussion}},
      {"Acknowledgement of Study Limitation(s)", {K::kDiscussion, K::kMethods}},
      {"Suggestion for Future Research / Outlook", {K::kDiscussion}},
      {"Overall Concluding Remark / Take-Home Message", {K::kResults, K::kDiscussion}},
  };
  const IuSchema& s = LoadSchema();
  if (s.categories().size() != 13) return "category count";
  for (int id = 1; id <= 13; ++id) {
    const IUCategory& c = s.Get(id);
    if (c.name != want[id - 1].first) return "name of category " + std::to_string(id);
    if (c.primary_locations != want[id - 1].second) return "locations of " + std::to_string(id);
    std::vector<K> targets = CategorySearchTargets(c);
    std::vector<K> sorted = targets, imrad = ImradKinds();
    std::sort(sorted.begin(), sorted.end());
    std::sort(imrad.begin(), imrad.end());
    if (sorted != imrad) return "search targets of " + std::to_string(id);
    if (!std::equal(c.primary_locations.begin(), c.primary_locations.end(), targets.begin())) {
      return "primary locations not first for " + std::to_string(id);
    }
  }
  return "";
}

int NearestFive(std::size_t s, std::size_t r) {
  // Smallest k with 5k > 100 s / r - 2.5, i.e. 10 k r > 200 s - 5 r; exact
  // halves therefore round up.
  long k = 0;
  while (10 * k * static_cast<long>(r) <= 200 * static_cast<long>(s) - 5 * static_cast<long>(r)) ++k;
  return static_cast<int>(5 * k);
}

std::string RoundingProperty() {
  std::mt19937_64 rng(20261016);
  for (int i = 0; i < 10000; ++i) {
    std::size_t runs = std::uniform_int_distribution<std::size_t>(1, 100)(rng);
    std::size_t succ = std::uniform_int_distribution<std::size_t>(0, runs)(rng);
    std::vector<RunRecord> records(runs);
    for (std::size_t k = 0; k < runs; ++k) {
      records[k].run_index = k;
      records[k].parsed = true;
      records[k].hits["c"] = k < succ;
    }
    SuccessRow row = Summarize("S", ContextMode::kFull, records, "c");
    if (row.successes + row.failures != row.runs || row.runs != runs || row.successes != succ) {
      return "conservation at " + std::to_string(succ) + "/" + std::to_string(runs);
    }
    long gap = std::labs(2L * row.rate_display * static_cast<long>(runs) - 200L * static_cast<long>(succ));
    if (gap > 5L * static_cast<long>(runs)) {
      return "bound at " + std::to_string(succ) + "/" + std::to_string(runs);
    }
    if (row.rate_display != NearestFive(succ, runs)) {
      return "half-up rounding at " + std::to_string(succ) + "/" + std::to_string(runs);
    }
  }
  return "";
}

std::vector<fs::path> CorpusFiles() {
  std::vector<fs::path> files = {Fixture("ground_truth_manuscript.md")};
  for (const auto& e : fs::directory_iterator(Fixture("corpus"))) {
    if (e.path().extension() != ".json") files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  return files;
}

// Writes every heuristic report for one document into `dir`.
void Pipeline(const fs::path& doc, const fs::path& dir) {
  std::string text = Read(doc);
  ParseOptions opts;
  opts.format = GuessInputFormat(text);
  opts.source_id = doc.filename().string();
  Manuscript m = ParseManuscript(text, opts);
  const std::string stem = doc.stem().string();
  std::ofstream(dir / (stem + ".sections.json"), std::ios::binary) << SectionsJson(m);
  for (SectionKind target : {SectionKind::kAbstract, SectionKind::kConclusions}) {
    const std::string name = stem + "." + FoldCase(SectionKindName(target));
    try {
      std::ofstream(dir / (name + ".integrity.json"), std::ios::binary)
          << IntegrityReportJson(HeuristicIntegrity(m, target));
      std::ofstream(dir / (name + ".integrity.txt"), std::ios::binary)
          << RenderIntegrityText(HeuristicIntegrity(m, target));
      for (ContextMode mode : {ContextMode::kLimited, ContextMode::kFull}) {
        LinguisticReport r = HeuristicLinguistic(m, target, mode);
        std::string base = name + "." + std::string(ContextModeName(mode));
        std::ofstream(dir / (base + ".pronouns.json"), std::ios::binary) << LinguisticReportJson(r);
        std::ofstream(dir / (base + ".pronouns.txt"), std::ios::binary) << RenderLinguisticText(r);
      }
    } catch (const Error& e) {
      std::ofstream(dir / (name + ".error.txt"), std::ios::binary) << e.what();
    }
  }
}

std::string Determinism() {
  fs::path root = fs::temp_directory_path() / "manucheck_acceptance_determinism";
  fs::remove_all(root);
  fs::path a = root / "a", b = root / "b";
  fs::create_directories(a);
  fs::create_directories(b);
  std::vector<fs::path> docs = CorpusFiles();
  for (const fs::path& d : docs) Pipeline(d, a);
  // Second pass runs documents concurrently, in reverse order.
  std::vector<std::thread> threads;
  for (auto it = docs.rbegin(); it != docs.rend(); ++it) {
    threads.emplace_back([&b, d = *it] { Pipeline(d, b); });
  }
  for (auto& t : threads) t.join();
  std::size_t files = 0;
  for (const auto& e : fs::directory_iterator(a)) {
    fs::path other = b / e.path().filename();
    if (!fs::exists(other)) return "missing " + other.filename().string();
    if (Read(e.path()) != Read(other)) return "differs: " + other.filename().string();
    ++files;
  }
  std::size_t files_b = std::distance(fs::directory_iterator(b), fs::directory_iterator{});
  fs::remove_all(root);
  if (files != files_b) return "file counts differ";
  if (files < docs.size() * 3) return "too few reports (" + std::to_string(files) + ")";
  return "";
}

std::string ParserProperties() {
  auto manifest = nlohmann::json::parse(Read(Fixture("corpus/expected.json")));
  if (manifest.size() != 20) return "corpus size " + std::to_string(manifest.size());
  for (const auto& doc : manifest) {
    const std::string file = doc["file"];
    ParseOptions opts;
    opts.format = doc["format"] == "plain" ? InputFormat::kPlain : InputFormat::kMarkdown;
    Manuscript m = ParseManuscript(Read(Fixture("corpus/" + file)), opts);
    if (m.sections.size() != doc["sections"].size()) return file + ": section count";
    std::size_t prev = 0;
    for (std::size_t i = 0; i < m.sections.size(); ++i) {
      const Section& s = m.sections[i];
      const auto& want = doc["sections"][i];
      if (FoldCase(SectionKindName(s.kind)) != want["kind"].get<std::string>()) {
        return file + ": kind of section " + std::to_string(i);
      }
      // Round-trip: body is raw_text over the span minus the heading line.
      if (s.span.begin < prev || s.span.end > m.raw_text.size() || !s.span.Contains(s.body_span) ||
          Slice(m.raw_text, s.body_span) != s.body) {
        return file + ": span round-trip of section " + std::to_string(i);
      }
      std::string_view head = Slice(m.raw_text, Span{s.span.begin, s.body_span.begin});
      if (head.find('\n') == std::string_view::npos && s.body_span.begin != s.span.end) {
        return file + ": heading line";
      }
      prev = s.span.end;
      // Coverage: sentences plus whitespace gaps rebuild the body.
      std::vector<Sentence> sentences = SegmentSentences(s);
      std::size_t pos = 0;
      std::vector<std::string> texts;
      for (const Sentence& x : sentences) {
        if (x.span.begin < pos) return file + ": overlapping sentences";
        for (std::size_t c = pos; c < x.span.begin; ++c) {
          if (!IsSpace(s.body[c])) return file + ": non-space gap";
        }
        if (Slice(s.body, x.span) != x.text) return file + ": sentence text";
        pos = x.span.end;
        texts.push_back(x.text);
      }
      for (std::size_t c = pos; c < s.body.size(); ++c) {
        if (!IsSpace(s.body[c])) return file + ": uncovered tail";
      }
      if (texts != want["sentences"].get<std::vector<std::string>>()) {
        return file + ": segmentation of section " + std::to_string(i);
      }
    }
    // Idempotence over serialize/parse.
    Manuscript b = ParseManuscript(SerializeManuscript(m), {});
    Manuscript c = ParseManuscript(SerializeManuscript(b), {});
    if (b.sections.size() != c.sections.size()) return file + ": reparse section count";
    for (std::size_t i = 0; i < b.sections.size(); ++i) {
      if (b.sections[i].kind != c.sections[i].kind || b.sections[i].span != c.sections[i].span ||
          b.sections[i].body != m.sections[i].body) {
        return file + ": reparse differs";
      }
    }
  }
  return "";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, Check>> criteria = {
      {"1 integrity ground truth", IntegrityGroundTruth},
      {"2 linguistic ground truth (limited and full)", LinguisticGroundTruth},
      {"3 no false positives on the full fixture", NoFalsePositives},
      {"4 table reproduction via replay", TableReproduction},
      {"5 schema suite", SchemaSuite},
      {"6 rounding property (10000 pairs)", RoundingProperty},
      {"7 determinism over the fixture corpus", Determinism},
      {"8 parser properties over the synthetic corpus", ParserProperties},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    std::string why;
    try {
      why = check();
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    if (why.empty()) {
      std::printf("PASS %s\n", name.c_str());
    } else {
      std::printf("FAIL %s: %s\n", name.c_str(), why.c_str());
      ++failures;
    }
  }
  return failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
