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

// Command-line entry point.
//
// Exit status: 0 clean, 1 error, 2 flags raised.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "manucheck/doc_model.h"
#include "manucheck/error.h"
#include "manucheck/evalharness.h"
#include "manucheck/gateway.h"
#include "manucheck/integrity.h"
#include "manucheck/iu_schema.h"
#include "manucheck/linguistic.h"
#include "manucheck/report.h"

namespace {

using namespace manucheck;

constexpr int kExitClean = 0;
constexpr int kExitError = 1;
constexpr int kExitFlags = 2;

struct InputOptions {
  std::string path;
  std::string input_format = "auto";
  std::vector<std::string> aliases;  // "Heading=Kind"
};

struct BackendOptions {
  std::string mode = "heuristic";
  std::string replay_store;
  std::string endpoint;
  std::string model;
  double rate_limit = 0;
  std::size_t run_index = 0;
};

struct OutputOptions {
  std::string format = "text";
  std::string path;
};

std::string ReadInput(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoFailure, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void Emit(const OutputOptions& out, const std::string& content) {
  if (out.path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream file(out.path, std::ios::binary | std::ios::trunc);
  if (!file || !(file << content)) {
    throw Error(ErrorCode::kIoFailure, "cannot write " + out.path);
  }
}

OutputFormat RequireFormat(const std::string& name) {
  auto f = ParseOutputFormat(name);
  if (!f) throw Error(ErrorCode::kInvalidArgument, "unknown format '" + name + "'");
  return *f;
}

SectionKind RequireSection(const std::string& name) {
  auto kind = ParseSectionKind(name);
  if (!kind) throw Error(ErrorCode::kInvalidArgument, "unknown section '" + name + "'");
  return *kind;
}

Manuscript LoadManuscript(const InputOptions& in, HeadingAliases* aliases) {
  std::string text = ReadInput(in.path);
  *aliases = HeadingAliases::Default();
  for (const std::string& entry : in.aliases) {
    std::size_t eq = entry.find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorCode::kInvalidArgument, "alias must be 'Heading=Kind': " + entry);
    }
    aliases->Add(entry.substr(0, eq), RequireSection(entry.substr(eq + 1)));
  }
  ParseOptions options;
  options.aliases = aliases;
  options.source_id = in.path;
  if (in.input_format == "auto") {
    options.format = GuessInputFormat(text);
  } else {
    auto f = ParseInputFormat(in.input_format);
    if (!f) {
      throw Error(ErrorCode::kInvalidArgument,
                  "unknown input format '" + in.input_format + "'");
    }
    options.format = *f;
  }
  return ParseManuscript(text, options);
}

std::unique_ptr<Backend> BuildBackend(const BackendOptions& b) {
  BackendDescriptor d;
  auto mode = ParseBackendMode(b.mode);
  if (!mode) throw Error(ErrorCode::kInvalidArgument, "unknown backend '" + b.mode + "'");
  d.mode = *mode;
  d.replay_store = b.replay_store;
  d.endpoint = b.endpoint;
  d.model_name = b.model;
  d.rate_limit = b.rate_limit;
  return MakeBackend(d);
}

void AddInput(CLI::App* cmd, InputOptions* in) {
  cmd->add_option("file", in->path, "Manuscript (UTF-8 plain text or Markdown)")->required();
  cmd->add_option("--input-format", in->input_format, "auto, plain or markdown");
  cmd->add_option("--alias", in->aliases, "Extra heading alias, e.g. 'Summary=Conclusions'");
}

void AddBackend(CLI::App* cmd, BackendOptions* b) {
  cmd->add_option("--backend", b->mode, "heuristic, replay or live");
  cmd->add_option("--replay-store", b->replay_store, "Replay store directory");
  cmd->add_option("--run-index", b->run_index, "Recorded run to replay");
  cmd->add_option("--endpoint", b->endpoint, "Live chat-completion URL");
  cmd->add_option("--model", b->model, "Live model name");
  cmd->add_option("--rate-limit", b->rate_limit, "Live requests per minute");
}

void AddOutput(CLI::App* cmd, OutputOptions* out) {
  cmd->add_option("--format", out->format, "text or json");
  cmd->add_option("-o,--output", out->path, "Write the report here instead of stdout");
}

int Run(int argc, char** argv) {
  CLI::App app{"Summary-section integrity and pronoun clarity checks"};
  app.require_subcommand(1);

  // sections
  InputOptions sections_in;
  OutputOptions sections_out;
  CLI::App* sections = app.add_subcommand("sections", "Print the parsed section map");
  AddInput(sections, &sections_in);
  AddOutput(sections, &sections_out);

  // analyze
  CLI::App* analyze = app.add_subcommand("analyze", "Run an analysis workflow");
  analyze->require_subcommand(1);

  InputOptions integ_in;
  BackendOptions integ_backend;
  OutputOptions integ_out;
  std::string integ_section = "conclusions";
  CLI::App* integrity = analyze->add_subcommand("integrity", "Flag unsubstantiated claims");
  AddInput(integrity, &integ_in);
  integrity->add_option("--section", integ_section, "abstract or conclusions");
  AddBackend(integrity, &integ_backend);
  AddOutput(integrity, &integ_out);

  InputOptions pron_in;
  BackendOptions pron_backend;
  OutputOptions pron_out;
  std::string pron_section = "conclusions";
  std::string pron_context = "limited";
  std::size_t pron_window = kDefaultWindow;
  CLI::App* pronouns = analyze->add_subcommand("pronouns", "Flag ambiguous pronouns");
  AddInput(pronouns, &pron_in);
  pronouns->add_option("--section", pron_section, "abstract or conclusions");
  pronouns->add_option("--context", pron_context, "limited or full");
  pronouns->add_option("--window", pron_window, "Preceding sentences searched for antecedents")
      ->check(CLI::PositiveNumber);
  AddBackend(pronouns, &pron_backend);
  AddOutput(pronouns, &pron_out);

  // eval
  CLI::App* eval = app.add_subcommand("eval", "Repeated-run evaluation");
  eval->require_subcommand(1);
  std::string config_path;
  CLI::App* eval_run = eval->add_subcommand("run", "Run every series of a config");
  eval_run->add_option("--config", config_path, "Series config file")->required();
  std::vector<std::string> series_dirs;
  std::string table_format = "text";
  std::string table_path;
  CLI::App* eval_report = eval->add_subcommand("report", "Rebuild a table from run logs");
  eval_report->add_option("--series", series_dirs, "Series directory")->required();
  eval_report->add_option("--format", table_format, "csv, json or text");
  eval_report->add_option("-o,--output", table_path, "Write the table here");

  // schema
  CLI::App* schema = app.add_subcommand("schema", "IU category schema");
  schema->require_subcommand(1);
  std::string schema_path;
  CLI::App* schema_export = schema->add_subcommand("export", "Write the schema as JSON");
  schema_export->add_option("-o,--output", schema_path, "Output file");

  // prompt
  CLI::App* prompt = app.add_subcommand("prompt", "Prompt templates");
  prompt->require_subcommand(1);
  std::string prompt_id;
  std::string prompt_section = "conclusions";
  std::size_t prompt_window = kDefaultWindow;
  CLI::App* prompt_render = prompt->add_subcommand("render", "Render a shipped template");
  prompt_render->add_option("id", prompt_id, "integrity or linguistic")->required();
  prompt_render->add_option("--section", prompt_section, "abstract or conclusions");
  prompt_render->add_option("--window", prompt_window, "Antecedent window");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitClean : kExitError;
  }

  HeadingAliases aliases;
  if (*sections) {
    Manuscript m = LoadManuscript(sections_in, &aliases);
    OutputFormat f = RequireFormat(sections_out.format);
    Emit(sections_out, f == OutputFormat::kJson ? SectionsJson(m) : RenderSectionsText(m));
    return kExitClean;
  }

  if (*integrity) {
    SectionKind target = RequireSection(integ_section);
    OutputFormat f = RequireFormat(integ_out.format);
    auto backend = BuildBackend(integ_backend);
    Manuscript m = LoadManuscript(integ_in, &aliases);
    IntegrityReport report =
        RunIntegrityWorkflow(m, target, *backend, integ_backend.run_index);
    Emit(integ_out, f == OutputFormat::kJson ? IntegrityReportJson(report)
                                             : RenderIntegrityText(report));
    return report.flags.empty() ? kExitClean : kExitFlags;
  }

  if (*pronouns) {
    SectionKind target = RequireSection(pron_section);
    OutputFormat f = RequireFormat(pron_out.format);
    auto mode = ParseContextMode(pron_context);
    if (!mode) throw Error(ErrorCode::kInvalidArgument, "unknown context '" + pron_context + "'");
    auto backend = BuildBackend(pron_backend);
    Manuscript m;
    try {
      m = LoadManuscript(pron_in, &aliases);
    } catch (const Error& e) {
      // A bare summary without headings is accepted in limited mode.
      if (e.code() != ErrorCode::kNoHeadingsFound || *mode != ContextMode::kLimited) throw;
      m = ManuscriptFromSection(ReadInput(pron_in.path), target, pron_in.path);
    }
    LinguisticReport report = RunLinguisticWorkflow(m, target, *mode, *backend,
                                                    pron_window, pron_backend.run_index);
    Emit(pron_out, f == OutputFormat::kJson ? LinguisticReportJson(report)
                                            : RenderLinguisticText(report));
    return report.flags.empty() ? kExitClean : kExitFlags;
  }

  if (*eval_run) {
    SuccessTable table = RunHarness(LoadHarnessConfig(config_path));
    std::cout << FormatTable(table, TableFormat::kText);
    return kExitClean;
  }

  if (*eval_report) {
    auto f = ParseTableFormat(table_format);
    if (!f) throw Error(ErrorCode::kInvalidArgument, "unknown format '" + table_format + "'");
    SuccessTable table;
    for (const std::string& dir : series_dirs) {
      for (SuccessRow& row : ReportSeries(dir)) table.rows.push_back(std::move(row));
    }
    Emit(OutputOptions{"", table_path}, FormatTable(table, *f));
    return kExitClean;
  }

  if (*schema_export) {
    Emit(OutputOptions{"", schema_path}, LoadSchema().ToJson());
    return kExitClean;
  }

  if (*prompt_render) {
    const PromptTemplate& t = PromptTemplate::Get(prompt_id);
    SlotValues values{{"target_section", std::string(SectionKindName(RequireSection(prompt_section)))},
                      {"window", std::to_string(prompt_window)},
                      {"iu_schema", LoadSchema().RenderForPrompt()}};
    std::cout << RenderPrompt(t, values);
    return kExitClean;
  }
  return kExitError;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return Run(argc, argv);
  } catch (const manucheck::Error& e) {
    std::cerr << "manucheck: " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "manucheck: " << e.what() << "\n";
  }
  return kExitError;
}
