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

#include "manucheck/evalharness.h"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "json.hpp"
#include "manucheck/error.h"
#include "manucheck/lexicon.h"
#include "manucheck/text.h"

namespace manucheck {
namespace {

namespace fs = std::filesystem;
namespace pt = boost::property_tree;
using Json = nlohmann::ordered_json;

std::vector<std::string> PhraseKeys(std::string_view phrase) {
  const Lexicon& lx = Lexicon::Default();
  std::vector<std::string> out;
  for (const KeyToken& k : KeyTokens(NormalizeNfc(phrase))) {
    if (lx.IsStopword(k.key)) continue;
    out.push_back(k.lemma);
  }
  return out;
}

std::string ReadFile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoFailure, "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteFile(const fs::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out || !out.write(content.data(), content.size())) {
    throw Error(ErrorCode::kIoFailure, "cannot write " + path.string());
  }
}

std::string ContextLabel(ContextMode mode) {
  return mode == ContextMode::kLimited ? "Limited" : "Full";
}

std::string RunFileName(std::size_t i) {
  char name[40];
  std::snprintf(name, sizeof(name), "outputs/run_%03zu.txt", i);
  return name;
}

Json RecordJson(const RunRecord& r) {
  Json hits = Json::object();
  for (const auto& [id, hit] : r.hits) hits[id] = hit;
  Json j{{"run", r.run_index},
         {"timestamp", r.timestamp},
         {"output", r.output_ref},
         {"parsed", r.parsed},
         {"error", r.error},
         {"hits", hits}};
  j["excluded"] = r.excluded ? Json(*r.excluded) : Json(nullptr);
  return j;
}

RunRecord RecordFromJson(const Json& j) {
  RunRecord r;
  r.run_index = j.at("run").get<std::size_t>();
  r.timestamp = j.value("timestamp", "");
  r.output_ref = j.value("output", "");
  r.parsed = j.value("parsed", false);
  r.error = j.value("error", "");
  for (const auto& [id, hit] : j.at("hits").items()) r.hits[id] = hit.get<bool>();
  if (j.contains("excluded") && j["excluded"].is_string()) {
    r.excluded = j["excluded"].get<std::string>();
  }
  return r;
}

Json SeriesJson(const SeriesConfig& cfg) {
  Json criteria = Json::array();
  for (const TargetCriterion& c : cfg.criteria) {
    criteria.push_back(Json{{"id", c.id},
                            {"keys", c.keys},
                            {"contiguous", c.contiguous},
                            {"description", c.description}});
  }
  Json exclusions = Json::object();
  for (const auto& [i, reason] : cfg.exclusions) exclusions[std::to_string(i)] = reason;
  return Json{{"label", cfg.label},
              {"prompt", cfg.prompt_id},
              {"context", ContextModeName(cfg.context)},
              {"runs", cfg.runs},
              {"backend", BackendModeName(cfg.backend.mode)},
              {"target", SectionKindName(cfg.target)},
              {"window", cfg.window},
              {"scoring", ScoringModeName(cfg.scoring)},
              {"primary", cfg.PrimaryCriterion()},
              {"criteria", criteria},
              {"exclusions", exclusions}};
}

SeriesConfig SeriesFromJson(const Json& j) {
  SeriesConfig cfg;
  cfg.label = j.at("label").get<std::string>();
  cfg.prompt_id = j.value("prompt", "integrity");
  cfg.context = ParseContextMode(j.value("context", "full")).value_or(ContextMode::kFull);
  cfg.runs = j.value("runs", 0);
  cfg.scoring = j.value("scoring", "primary") == "per-target" ? ScoringMode::kPerTarget
                                                              : ScoringMode::kPrimary;
  cfg.primary = j.value("primary", "");
  for (const auto& c : j.at("criteria")) {
    TargetCriterion t;
    t.id = c.at("id").get<std::string>();
    t.keys = c.at("keys").get<std::vector<std::string>>();
    t.contiguous = c.value("contiguous", false);
    t.description = c.value("description", "");
    cfg.criteria.push_back(std::move(t));
  }
  if (j.contains("exclusions")) {
    for (const auto& [k, v] : j["exclusions"].items()) {
      cfg.exclusions[std::stoul(k)] = v.get<std::string>();
    }
  }
  return cfg;
}

std::vector<std::string> SplitList(std::string_view s) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t comma = s.find(',', pos);
    if (comma == std::string_view::npos) comma = s.size();
    std::string_view item = Trim(s.substr(pos, comma - pos));
    if (!item.empty()) out.emplace_back(item);
    pos = comma + 1;
  }
  return out;
}

std::size_t ParseCount(const std::string& key, const std::string& value) {
  std::size_t used = 0;
  unsigned long n = 0;
  try {
    n = std::stoul(value, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != value.size() || value.empty() || value[0] == '-') {
    throw Error(ErrorCode::kInvalidConfig,
                "'" + key + "' must be a non-negative integer, got '" + value + "'");
  }
  return n;
}

std::string Resolve(const std::string& base_dir, const std::string& path) {
  if (path.empty() || fs::path(path).is_absolute()) return path;
  return (fs::path(base_dir) / path).lexically_normal().string();
}

const std::set<std::string>& KnownKeys() {
  static const std::set<std::string> keys = {
      "label", "prompt", "context", "runs", "backend", "replay_store",
      "endpoint", "model", "rate_limit", "api_key_env", "timeout",
      "attachment", "criteria", "primary", "scoring", "target", "window",
      "fan_out", "output"};
  return keys;
}

}  // namespace

bool TargetCriterion::Matches(std::string_view phrase) const {
  if (keys.empty()) return false;
  std::vector<std::string> got = PhraseKeys(phrase);
  if (contiguous) {
    if (got.size() < keys.size()) return false;
    for (std::size_t s = 0; s + keys.size() <= got.size(); ++s) {
      if (std::equal(keys.begin(), keys.end(), got.begin() + s)) return true;
    }
    return false;
  }
  std::size_t k = 0;
  for (const std::string& g : got) {
    if (k < keys.size() && g == keys[k]) ++k;
  }
  return k == keys.size();
}

TargetCriterion TargetCriterion::FromPhrase(std::string id, std::string_view phrase,
                                            bool contiguous) {
  TargetCriterion c;
  c.id = std::move(id);
  c.keys = PhraseKeys(phrase);
  c.contiguous = contiguous;
  c.description = std::string(phrase);
  if (c.keys.empty()) {
    throw Error(ErrorCode::kInvalidConfig,
                "criterion '" + c.id + "' has no content words");
  }
  return c;
}

std::optional<TargetCriterion> TargetCriterion::BuiltIn(std::string_view id) {
  if (id == "90mL") return FromPhrase("90mL", "90 mL", true);
  if (id == "40fold") return FromPhrase("40fold", "40-fold", true);
  if (id == "detection-of-reactions") {
    return FromPhrase("detection-of-reactions", "detection of reactions");
  }
  if (id == "power-of-NMR") return FromPhrase("power-of-NMR", "power of NMR");
  return std::nullopt;
}

std::string_view ScoringModeName(ScoringMode mode) {
  return mode == ScoringMode::kPrimary ? "primary" : "per-target";
}

const std::string& SeriesConfig::PrimaryCriterion() const {
  static const std::string kEmpty;
  if (!primary.empty()) return primary;
  return criteria.empty() ? kEmpty : criteria.front().id;
}

void SeriesConfig::Validate() const {
  if (runs == 0) {
    throw Error(ErrorCode::kEmptySeries, "series '" + label + "' has no runs");
  }
  if (label.empty()) throw Error(ErrorCode::kInvalidConfig, "series without a label");
  if (criteria.empty()) {
    throw Error(ErrorCode::kInvalidConfig, "series '" + label + "' has no criteria");
  }
  const std::string& p = PrimaryCriterion();
  if (std::none_of(criteria.begin(), criteria.end(),
                   [&](const TargetCriterion& c) { return c.id == p; })) {
    throw Error(ErrorCode::kInvalidConfig,
                "primary criterion '" + p + "' is not among the series criteria");
  }
  if (!exclusions.empty() && exclusions.rbegin()->first >= runs) {
    throw Error(ErrorCode::kInvalidConfig,
                "exclusion refers to run " + std::to_string(exclusions.rbegin()->first) +
                    " of a " + std::to_string(runs) + "-run series");
  }
  if (prompt_id != "integrity" && prompt_id != "linguistic") {
    throw Error(ErrorCode::kInvalidConfig, "unknown prompt '" + prompt_id + "'");
  }
  if (fan_out == 0) throw Error(ErrorCode::kInvalidConfig, "fan_out must be >= 1");
  backend.Validate();
}

HarnessConfig LoadHarnessConfig(const std::string& path) {
  std::string text = ReadFile(path);
  return ParseHarnessConfig(text, fs::absolute(path).parent_path().string());
}

HarnessConfig ParseHarnessConfig(std::string_view text, const std::string& base_dir) {
  pt::ptree tree;
  try {
    std::istringstream in{std::string(text)};
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw Error(ErrorCode::kInvalidConfig, e.what());
  }

  std::map<std::string, std::string> globals;
  std::map<std::string, std::string> global_criteria;
  std::vector<std::pair<std::string, const pt::ptree*>> sections;
  for (const auto& [key, child] : tree) {
    if (child.empty()) {
      if (key.rfind("criterion.", 0) == 0) {
        global_criteria[key.substr(10)] = child.data();
      } else if (KnownKeys().count(key)) {
        globals[key] = child.data();
      } else {
        throw Error(ErrorCode::kInvalidConfig, "unknown key '" + key + "'");
      }
    } else {
      sections.emplace_back(key, &child);
    }
  }

  HarnessConfig config;
  config.output_dir = Resolve(base_dir, globals.count("output") ? globals["output"] : "eval_out");
  if (sections.empty()) {
    throw Error(ErrorCode::kInvalidConfig, "config defines no [series] section");
  }
  std::set<std::string> slugs;
  for (const auto& [name, section] : sections) {
    std::map<std::string, std::string> values = globals;
    std::map<std::string, std::string> criteria_phrases = global_criteria;
    SeriesConfig cfg;
    for (const auto& [key, child] : *section) {
      const std::string value(Trim(child.data()));
      if (key.rfind("exclude.", 0) == 0) {
        cfg.exclusions[ParseCount(key, key.substr(8))] = value;
      } else if (key.rfind("criterion.", 0) == 0) {
        criteria_phrases[key.substr(10)] = value;
      } else if (KnownKeys().count(key) && key != "output") {
        values[key] = value;
      } else {
        throw Error(ErrorCode::kInvalidConfig,
                    "unknown key '" + key + "' in [" + name + "]");
      }
    }
    auto get = [&](const std::string& key, const std::string& fallback) {
      auto it = values.find(key);
      return it == values.end() ? fallback : std::string(Trim(it->second));
    };

    cfg.label = get("label", name);
    cfg.prompt_id = get("prompt", "integrity");
    auto context = ParseContextMode(get("context", "full"));
    if (!context) throw Error(ErrorCode::kInvalidConfig, "bad context in [" + name + "]");
    cfg.context = *context;
    cfg.runs = ParseCount("runs", get("runs", "0"));
    auto mode = ParseBackendMode(get("backend", "heuristic"));
    if (!mode) throw Error(ErrorCode::kInvalidConfig, "bad backend in [" + name + "]");
    cfg.backend.mode = *mode;
    cfg.backend.replay_store = Resolve(base_dir, get("replay_store", ""));
    cfg.backend.endpoint = get("endpoint", "");
    cfg.backend.model_name = get("model", "");
    cfg.backend.api_key_env = get("api_key_env", cfg.backend.api_key_env);
    try {
      cfg.backend.rate_limit = std::stod(get("rate_limit", "0"));
    } catch (const std::exception&) {
      throw Error(ErrorCode::kInvalidConfig, "bad rate_limit in [" + name + "]");
    }
    cfg.backend.timeout_seconds =
        static_cast<int>(ParseCount("timeout", get("timeout", "120")));
    cfg.attachment = Resolve(base_dir, get("attachment", ""));
    auto target = ParseSectionKind(get("target", "conclusions"));
    if (!target) throw Error(ErrorCode::kInvalidConfig, "bad target in [" + name + "]");
    cfg.target = *target;
    cfg.window = ParseCount("window", get("window", "2"));
    cfg.fan_out = ParseCount("fan_out", get("fan_out", "1"));
    std::string scoring = get("scoring", "primary");
    if (scoring == "per-target") {
      cfg.scoring = ScoringMode::kPerTarget;
    } else if (scoring == "primary") {
      cfg.scoring = ScoringMode::kPrimary;
    } else {
      throw Error(ErrorCode::kInvalidConfig, "bad scoring '" + scoring + "'");
    }
    for (const std::string& id : SplitList(get("criteria", ""))) {
      if (auto it = criteria_phrases.find(id); it != criteria_phrases.end()) {
        cfg.criteria.push_back(TargetCriterion::FromPhrase(id, it->second));
      } else if (auto builtin = TargetCriterion::BuiltIn(id)) {
        cfg.criteria.push_back(*builtin);
      } else {
        throw Error(ErrorCode::kInvalidConfig, "unknown criterion '" + id + "'");
      }
    }
    cfg.primary = get("primary", "");
    if (cfg.attachment.empty()) {
      throw Error(ErrorCode::kInvalidConfig, "[" + name + "] has no attachment");
    }
    cfg.Validate();
    if (!slugs.insert(SeriesDirName(cfg)).second) {
      throw Error(ErrorCode::kInvalidConfig,
                  "duplicate series '" + cfg.label + "' (" +
                      std::string(ContextModeName(cfg.context)) + " context)");
    }
    config.series.push_back(std::move(cfg));
  }
  return config;
}

std::map<std::string, bool> ScoreRun(const std::optional<StructuredReport>& report,
                                     const std::vector<TargetCriterion>& criteria) {
  std::map<std::string, bool> hits;
  std::vector<std::string> phrases;
  if (report) phrases = report->Phrases();
  for (const TargetCriterion& c : criteria) {
    hits[c.id] = std::any_of(phrases.begin(), phrases.end(),
                             [&](const std::string& p) { return c.Matches(p); });
  }
  return hits;
}

std::vector<RunRecord> RunSeries(const SeriesConfig& cfg, const std::string& series_dir) {
  cfg.Validate();
  std::unique_ptr<Backend> backend = MakeBackend(cfg.backend);
  return RunSeries(cfg, *backend, series_dir);
}

std::vector<RunRecord> RunSeries(const SeriesConfig& cfg, Backend& backend,
                                 const std::string& series_dir) {
  cfg.Validate();
  ParseOptions options;
  std::string text = ReadFile(cfg.attachment);
  options.format = GuessInputFormat(text);
  options.source_id = cfg.attachment;
  Manuscript m = ParseManuscript(text, options);
  AnalysisRequest base = cfg.prompt_id == "integrity"
                             ? MakeIntegrityRequest(m, cfg.target)
                             : MakeLinguisticRequest(m, cfg.target, cfg.context, cfg.window);
  const ReportKind kind = base.kind;

  const fs::path dir(series_dir);
  std::error_code ec;
  fs::remove_all(dir / "outputs", ec);
  fs::create_directories(dir / "outputs", ec);
  if (ec) throw Error(ErrorCode::kIoFailure, "cannot create " + series_dir);
  WriteFile(dir / "series.json", SeriesJson(cfg).dump(2) + "\n");
  WriteFile(dir / "runs.jsonl", "");

  std::vector<std::optional<RunRecord>> results(cfg.runs);
  std::mutex mu;
  std::size_t next_write = 0;
  std::ofstream log(dir / "runs.jsonl", std::ios::app | std::ios::binary);
  std::atomic<std::size_t> next{0};
  std::atomic<bool> aborted{false};
  std::optional<Error> failure;

  auto flush_ready = [&] {
    while (next_write < results.size() && results[next_write]) {
      log << RecordJson(*results[next_write]).dump() << "\n";
      ++next_write;
    }
    log.flush();
  };

  auto worker = [&] {
    while (!aborted) {
      std::size_t i = next.fetch_add(1);
      if (i >= cfg.runs) return;
      AnalysisRequest request = base;
      request.run_index = i;
      RunRecord r;
      r.run_index = i;
      r.output_ref = RunFileName(i);
      if (auto it = cfg.exclusions.find(i); it != cfg.exclusions.end()) {
        r.excluded = it->second;
      }
      try {
        ModelOutput out = backend.Execute(request);
        WriteFile(dir / r.output_ref, out.raw_text);
        r.timestamp = out.metadata.timestamp;
        std::optional<StructuredReport> parsed = out.parsed;
        if (!parsed) {
          try {
            parsed = ParseStructuredText(out.raw_text, kind);
          } catch (const Error& e) {
            if (e.code() != ErrorCode::kParseFailure) throw;
            r.error = e.what();
          }
        }
        r.parsed = parsed.has_value();
        r.hits = ScoreRun(parsed, cfg.criteria);
      } catch (const Error& e) {
        std::lock_guard<std::mutex> lock(mu);
        if (!failure) {
          failure = Error(e.code(), "series '" + cfg.label + "' aborted at run " +
                                        std::to_string(i) + ": " + e.what());
        }
        aborted = true;
        return;
      }
      std::lock_guard<std::mutex> lock(mu);
      results[i] = std::move(r);
      flush_ready();
    }
  };

  std::size_t threads = std::min(cfg.fan_out, cfg.runs);
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  std::vector<RunRecord> records;
  for (std::size_t i = 0; i < results.size(); ++i) {
    if (!results[i]) continue;
    if (i >= next_write) log << RecordJson(*results[i]).dump() << "\n";
    records.push_back(*results[i]);
  }
  log.flush();
  if (failure) throw *failure;
  return records;
}

int RoundToFive(std::size_t successes, std::size_t runs) {
  if (runs == 0) return 0;
  return static_cast<int>(5 * ((40 * successes + runs) / (2 * runs)));
}

SuccessRow Summarize(std::string series, ContextMode context,
                     const std::vector<RunRecord>& records,
                     const std::string& criterion) {
  SuccessRow row;
  row.series = std::move(series);
  row.context = ContextLabel(context);
  for (const RunRecord& r : records) {
    if (r.excluded) continue;
    ++row.runs;
    auto it = r.hits.find(criterion);
    if (it != r.hits.end() && it->second) ++row.successes;
  }
  if (row.runs == 0) {
    throw Error(ErrorCode::kEmptySeries, "series '" + row.series + "' has no included runs");
  }
  row.failures = row.runs - row.successes;
  row.rate_display = RoundToFive(row.successes, row.runs);
  return row;
}

std::vector<SuccessRow> SummarizeSeries(const SeriesConfig& cfg,
                                        const std::vector<RunRecord>& records) {
  std::vector<SuccessRow> rows;
  if (cfg.scoring == ScoringMode::kPrimary) {
    rows.push_back(Summarize(cfg.label, cfg.context, records, cfg.PrimaryCriterion()));
  } else {
    for (const TargetCriterion& c : cfg.criteria) {
      rows.push_back(Summarize(cfg.label + " [" + c.id + "]", cfg.context, records, c.id));
    }
  }
  return rows;
}

std::optional<TableFormat> ParseTableFormat(std::string_view name) {
  std::string folded = FoldCase(Trim(name));
  if (folded == "csv") return TableFormat::kCsv;
  if (folded == "json") return TableFormat::kJson;
  if (folded == "text" || folded == "txt") return TableFormat::kText;
  return std::nullopt;
}

std::string FormatTable(const SuccessTable& table, TableFormat format) {
  if (table.rows.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "cannot export an empty table");
  }
  static const char* kColumns[] = {"series", "context", "runs",
                                   "successes", "failures", "success_rate"};
  std::ostringstream out;
  switch (format) {
    case TableFormat::kCsv: {
      auto field = [](const std::string& s) {
        if (s.find_first_of(",\"\n") == std::string::npos) return s;
        std::string q = "\"";
        for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
        return q + "\"";
      };
      out << "series,context,runs,successes,failures,success_rate\n";
      for (const SuccessRow& r : table.rows) {
        out << field(r.series) << "," << field(r.context) << "," << r.runs << ","
            << r.successes << "," << r.failures << "," << r.rate_display << "%\n";
      }
      break;
    }
    case TableFormat::kJson: {
      Json rows = Json::array();
      for (const SuccessRow& r : table.rows) {
        rows.push_back(Json{{"series", r.series},
                            {"context", r.context},
                            {"runs", r.runs},
                            {"successes", r.successes},
                            {"failures", r.failures},
                            {"success_rate", r.rate_display}});
      }
      Json columns = Json::array();
      for (const char* c : kColumns) columns.push_back(c);
      out << Json{{"columns", columns}, {"rows", rows}}.dump(2) << "\n";
      break;
    }
    case TableFormat::kText: {
      std::vector<std::vector<std::string>> cells;
      cells.push_back({"Series", "Context", "Runs", "Successes", "Failures", "Success Rate"});
      for (const SuccessRow& r : table.rows) {
        cells.push_back({r.series, r.context, std::to_string(r.runs),
                         std::to_string(r.successes), std::to_string(r.failures),
                         std::to_string(r.rate_display) + "%"});
      }
      std::vector<std::size_t> width(6, 0);
      for (const auto& row : cells) {
        for (std::size_t c = 0; c < 6; ++c) width[c] = std::max(width[c], row[c].size());
      }
      for (const auto& row : cells) {
        std::string line;
        for (std::size_t c = 0; c < 6; ++c) {
          std::string cell = row[c];
          cell.resize(width[c], ' ');
          line += cell;
          if (c < 5) line += "  ";
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out << line << "\n";
      }
      break;
    }
  }
  return out.str();
}

SuccessTable TableFromJson(std::string_view json_text) {
  SuccessTable table;
  try {
    Json doc = Json::parse(json_text);
    for (const auto& r : doc.at("rows")) {
      SuccessRow row;
      row.series = r.at("series").get<std::string>();
      row.context = r.at("context").get<std::string>();
      row.runs = r.at("runs").get<std::size_t>();
      row.successes = r.at("successes").get<std::size_t>();
      row.failures = r.at("failures").get<std::size_t>();
      row.rate_display = r.at("success_rate").get<int>();
      table.rows.push_back(std::move(row));
    }
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kParseFailure, std::string("bad table json: ") + e.what());
  }
  return table;
}

void ExportTable(const SuccessTable& table, TableFormat format, const std::string& path) {
  WriteFile(path, FormatTable(table, format));
}

std::vector<RunRecord> LoadRunRecords(const std::string& series_dir) {
  std::istringstream in(ReadFile(fs::path(series_dir) / "runs.jsonl"));
  std::vector<RunRecord> records;
  std::string line;
  while (std::getline(in, line)) {
    if (Trim(line).empty()) continue;
    try {
      records.push_back(RecordFromJson(Json::parse(line)));
    } catch (const Json::exception& e) {
      throw Error(ErrorCode::kParseFailure, std::string("bad run record: ") + e.what());
    }
  }
  std::sort(records.begin(), records.end(), [](const RunRecord& a, const RunRecord& b) {
    return a.run_index < b.run_index;
  });
  return records;
}

std::vector<SuccessRow> ReportSeries(const std::string& series_dir) {
  SeriesConfig cfg;
  try {
    cfg = SeriesFromJson(Json::parse(ReadFile(fs::path(series_dir) / "series.json")));
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kParseFailure, std::string("bad series.json: ") + e.what());
  }
  return SummarizeSeries(cfg, LoadRunRecords(series_dir));
}

std::string SeriesSlug(std::string_view label) {
  std::string slug;
  for (char c : FoldCase(label)) {
    bool alnum = (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9');
    if (alnum) {
      slug.push_back(c);
    } else if (!slug.empty() && slug.back() != '-') {
      slug.push_back('-');
    }
  }
  while (!slug.empty() && slug.back() == '-') slug.pop_back();
  return slug.empty() ? "series" : slug;
}

std::string SeriesDirName(const SeriesConfig& cfg) {
  return SeriesSlug(cfg.label + " " + std::string(ContextModeName(cfg.context)));
}

SuccessTable RunHarness(const HarnessConfig& config) {
  SuccessTable table;
  fs::path out(config.output_dir);
  std::error_code ec;
  fs::create_directories(out, ec);
  if (ec) throw Error(ErrorCode::kIoFailure, "cannot create " + config.output_dir);
  for (const SeriesConfig& cfg : config.series) {
    std::vector<RunRecord> records =
        RunSeries(cfg, (out / SeriesDirName(cfg)).string());
    for (SuccessRow& row : SummarizeSeries(cfg, records)) table.rows.push_back(std::move(row));
  }
  ExportTable(table, TableFormat::kCsv, (out / "table.csv").string());
  ExportTable(table, TableFormat::kJson, (out / "table.json").string());
  ExportTable(table, TableFormat::kText, (out / "table.txt").string());
  return table;
}

}  // namespace manucheck
