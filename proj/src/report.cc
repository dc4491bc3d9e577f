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

#include "manucheck/report.h"

#include <sstream>

#include "json.hpp"
#include "manucheck/iu_schema.h"
#include "manucheck/text.h"

namespace manucheck {
namespace {

using Json = nlohmann::ordered_json;

std::string JoinKinds(const std::vector<SectionKind>& kinds) {
  std::string out;
  for (std::size_t i = 0; i < kinds.size(); ++i) {
    if (i) out += ", ";
    out += SectionKindName(kinds[i]);
  }
  return out;
}

Json SpanJson(const Span& s) { return Json::array({s.begin, s.end}); }

Json SentencesJson(const std::vector<SentenceEntry>& sentences) {
  Json out = Json::array();
  for (const SentenceEntry& s : sentences) {
    out.push_back(Json{{"index", s.index}, {"text", s.text}});
  }
  return out;
}

Json ComponentJson(const Component& c) {
  return Json{{"role", ComponentRoleName(c.role)},
              {"text", c.text},
              {"span", SpanJson(c.span)},
              {"head", c.head},
              {"modifiers", c.modifiers}};
}

}  // namespace

std::optional<OutputFormat> ParseOutputFormat(std::string_view name) {
  std::string folded = FoldCase(Trim(name));
  if (folded == "text") return OutputFormat::kText;
  if (folded == "json") return OutputFormat::kJson;
  return std::nullopt;
}

std::string RenderIntegrityText(const IntegrityReport& report) {
  const IuSchema& schema = LoadSchema();
  std::ostringstream out;
  out << "# Informational Integrity Report\n\n";
  out << "Target: " << SectionKindName(report.target) << "\n";
  out << "Origin: " << ReportOriginName(report.origin) << "\n";
  out << "Sentences: " << report.sentences.size() << "\n\n";
  out << "## Information Units\n\n";
  if (report.origin == ReportOrigin::kModel) {
    out << "Not available: the report was read from model output.\n";
  }
  for (const UnitResult& r : report.units) {
    const InformationUnit& u = r.unit;
    const VerificationVerdict& v = r.verdict;
    out << "[" << u.id << "] \"" << u.gist << "\"\n";
    if (schema.Contains(u.assignment.category_id)) {
      out << "  category " << u.assignment.category_id << " ("
          << schema.Get(u.assignment.category_id).name << "), "
          << ConfidenceName(u.assignment.confidence) << " confidence: "
          << u.assignment.rationale << "\n";
    }
    out << "  " << VerificationStatusName(v.status) << "; searched "
        << JoinKinds(v.searched) << "\n";
    for (const Evidence& e : v.evidence) {
      out << "  evidence: \"" << e.group << "\" in " << SectionKindName(e.section)
          << " [" << e.span.begin << ", " << e.span.end << ")\n";
    }
    out << "  note: " << v.note << "\n";
  }
  out << "\n## Flagged Items\n\n";
  if (report.flags.empty()) out << "None\n";
  for (const IntegrityFlag& f : report.flags) {
    out << "- \"" << f.phrase << "\" -- " << VerificationStatusName(f.status);
    if (f.unit && *f.unit < report.units.size()) {
      out << " (" << report.units[*f.unit].verdict.note << ")";
    }
    out << "\n";
  }
  return out.str();
}

std::string RenderLinguisticText(const LinguisticReport& report) {
  std::ostringstream out;
  out << "# Linguistic Clarity Report\n\n";
  out << "Target: " << SectionKindName(report.target) << "\n";
  out << "Context: " << ContextModeName(report.context) << "\n";
  out << "Window: " << report.window << "\n";
  out << "Origin: " << ReportOriginName(report.origin) << "\n";
  out << "Sentences: " << report.sentences.size() << "\n\n";
  out << "## Findings\n\n";
  if (report.origin == ReportOrigin::kModel) {
    out << "Not available: the report was read from model output.\n";
  } else if (report.findings.empty()) {
    out << "No pronouns needing analysis.\n";
  }
  for (const AmbiguityFinding& f : report.findings) {
    out << "Sentence " << f.pronoun.sentence_ref.index + 1 << ", '"
        << f.pronoun.lexeme << "'" << (f.pronoun.standalone ? " (standalone)" : "")
        << ": " << AmbiguityVerdictName(f.verdict) << "\n";
    for (const ComponentVerdict& v : f.component_verdicts) {
      out << "  " << ComponentRoleName(v.component.role) << " '" << v.component.text
          << "': " << SupportStatusName(v.status) << " [" << BranchName(v.branch) << "]";
      if (v.evidence) out << " by sentence " << v.evidence->sentence_ref.index + 1;
      out << "\n";
    }
    out << "  candidates:";
    if (f.candidates.empty()) out << " none";
    for (const AntecedentCandidate& c : f.candidates) {
      out << " " << c.sentence_ref.index + 1;
    }
    out << "\n  note: " << f.explanation << "\n";
  }
  out << "\n## Flagged Items\n\n";
  if (report.flags.empty()) out << "None\n";
  for (const PronounFlag& f : report.flags) {
    out << "- \"" << f.pronoun << "\"";
    if (f.sentence) out << " (sentence " << *f.sentence + 1 << ")";
    out << " -- Ambiguous\n";
    for (const FlaggedComponent& c : f.components) {
      out << "  - " << ComponentRoleName(c.role) << ": \"" << c.text << "\" -- "
          << SupportStatusName(c.status) << "\n";
    }
  }
  return out.str();
}

std::string RenderSectionsText(const Manuscript& m) {
  std::ostringstream out;
  for (const Section& s : m.sections) {
    out << SectionKindName(s.kind) << "\t" << s.heading << "\t[" << s.span.begin
        << ", " << s.span.end << ")\t" << SegmentSentences(s).size()
        << " sentence(s)\n";
  }
  return out.str();
}

std::string IntegrityReportJson(const IntegrityReport& report) {
  const IuSchema& schema = LoadSchema();
  Json units = Json::array();
  for (const UnitResult& r : report.units) {
    const InformationUnit& u = r.unit;
    Json spans = Json::array();
    for (const Span& s : u.spans) spans.push_back(SpanJson(s));
    Json groups = Json::array();
    for (const TokenGroup& g : u.groups) {
      groups.push_back(Json{{"kind", GroupKindName(g.kind)},
                            {"text", g.text},
                            {"keys", g.keys},
                            {"span", SpanJson(g.span)}});
    }
    Json evidence = Json::array();
    for (const Evidence& e : r.verdict.evidence) {
      evidence.push_back(Json{{"section", SectionKindName(e.section)},
                              {"span", SpanJson(e.span)},
                              {"group", e.group}});
    }
    Json searched = Json::array();
    for (SectionKind k : r.verdict.searched) searched.push_back(SectionKindName(k));
    Json category{{"id", u.assignment.category_id},
                  {"name", schema.Contains(u.assignment.category_id)
                               ? schema.Get(u.assignment.category_id).name
                               : ""},
                  {"confidence", ConfidenceName(u.assignment.confidence)},
                  {"rationale", u.assignment.rationale}};
    units.push_back(Json{
        {"id", u.id},
        {"sentence", {{"section", SectionKindName(u.sentence_ref.section)},
                      {"index", u.sentence_ref.index}}},
        {"spans", spans},
        {"gist", u.gist},
        {"groups", groups},
        {"category", category},
        {"verdict", {{"status", VerificationStatusName(r.verdict.status)},
                     {"evidence", evidence},
                     {"searched", searched},
                     {"note", r.verdict.note}}},
    });
  }
  Json flags = Json::array();
  for (const IntegrityFlag& f : report.flags) {
    Json flag{{"phrase", f.phrase}, {"status", VerificationStatusName(f.status)}};
    flag["unit"] = f.unit ? Json(report.units[*f.unit].unit.id) : Json(nullptr);
    flags.push_back(flag);
  }
  Json doc{{"report", "integrity"},
           {"target", SectionKindName(report.target)},
           {"origin", ReportOriginName(report.origin)},
           {"sentences", SentencesJson(report.sentences)},
           {"units", units},
           {"flags", flags}};
  return doc.dump(2) + "\n";
}

std::string LinguisticReportJson(const LinguisticReport& report) {
  Json findings = Json::array();
  for (const AmbiguityFinding& f : report.findings) {
    const PronounOccurrence& p = f.pronoun;
    Json verdicts = Json::array();
    for (const ComponentVerdict& v : f.component_verdicts) {
      Json jv{{"component", ComponentJson(v.component)},
              {"branch", BranchName(v.branch)},
              {"status", SupportStatusName(v.status)}};
      jv["evidence"] = v.evidence
                           ? Json{{"sentence", v.evidence->sentence_ref.index},
                                  {"span", SpanJson(v.evidence->span)}}
                           : Json(nullptr);
      verdicts.push_back(jv);
    }
    Json candidates = Json::array();
    for (const AntecedentCandidate& c : f.candidates) {
      candidates.push_back(Json{{"sentence", c.sentence_ref.index},
                                {"span", SpanJson(c.span)},
                                {"text", c.text}});
    }
    Json context{{"action", f.context.action ? ComponentJson(*f.context.action)
                                             : Json(nullptr)}};
    Json substantive = Json::array();
    for (const Component& c : f.context.substantive) substantive.push_back(ComponentJson(c));
    context["substantive"] = substantive;
    findings.push_back(Json{
        {"pronoun", {{"lexeme", p.lexeme},
                     {"sentence", p.sentence_ref.index},
                     {"span", SpanJson(p.span)},
                     {"standalone", p.standalone},
                     {"expletive", p.expletive}}},
        {"verdict", AmbiguityVerdictName(f.verdict)},
        {"context", context},
        {"candidates", candidates},
        {"component_verdicts", verdicts},
        {"explanation", f.explanation},
    });
  }
  Json flags = Json::array();
  for (const PronounFlag& f : report.flags) {
    Json comps = Json::array();
    for (const FlaggedComponent& c : f.components) {
      comps.push_back(Json{{"role", ComponentRoleName(c.role)},
                           {"text", c.text},
                           {"status", SupportStatusName(c.status)}});
    }
    Json flag{{"pronoun", f.pronoun}};
    flag["sentence"] = f.sentence ? Json(*f.sentence) : Json(nullptr);
    flag["components"] = comps;
    flags.push_back(flag);
  }
  Json doc{{"report", "linguistic"},
           {"target", SectionKindName(report.target)},
           {"context", ContextModeName(report.context)},
           {"window", report.window},
           {"origin", ReportOriginName(report.origin)},
           {"sentences", SentencesJson(report.sentences)},
           {"findings", findings},
           {"flags", flags}};
  return doc.dump(2) + "\n";
}

std::string SectionsJson(const Manuscript& m) {
  Json sections = Json::array();
  for (const Section& s : m.sections) {
    Json sentences = Json::array();
    for (const Sentence& sent : SegmentSentences(s)) {
      sentences.push_back(Json{{"index", sent.index},
                               {"text", sent.text},
                               {"span", SpanJson(sent.span)}});
    }
    sections.push_back(Json{{"kind", SectionKindName(s.kind)},
                            {"label", s.label},
                            {"heading", s.heading},
                            {"span", SpanJson(s.span)},
                            {"body_span", SpanJson(s.body_span)},
                            {"sentences", sentences}});
  }
  Json doc{{"source_id", m.source_id}, {"sections", sections}};
  return doc.dump(2) + "\n";
}

}  // namespace manucheck
