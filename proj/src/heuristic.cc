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

#include "manucheck/heuristic.h"

#include "manucheck/error.h"
#include "manucheck/report.h"

namespace manucheck {

IntegrityReport HeuristicIntegrity(const Manuscript& m, SectionKind target,
                                   const Lexicon& lexicon, const IuSchema& schema) {
  if (!IsSummaryKind(target)) {
    throw Error(ErrorCode::kInvalidArgument,
                "integrity analysis targets Abstract or Conclusions, not " +
                    std::string(SectionKindName(target)));
  }
  const Section& section = LocateSection(m, target);
  EvidenceIndex index(m, lexicon);
  if (index.empty()) {
    throw Error(ErrorCode::kNoImradContent,
                "integrity analysis needs the full manuscript; only summary "
                "sections were supplied");
  }
  IntegrityReport report;
  report.target = target;
  report.origin = ReportOrigin::kEngine;
  for (const Sentence& s : SegmentSentences(section.body, lexicon)) {
    report.sentences.push_back(SentenceEntry{s.index, s.text});
    for (InformationUnit& unit : DecomposeIntoIus(s, target, lexicon)) {
      unit.assignment = ClassifyIu(unit, schema);
      VerificationVerdict verdict = VerifyIu(unit, index, schema);
      report.units.push_back(UnitResult{std::move(unit), std::move(verdict)});
    }
  }
  DeriveFlags(report);
  return report;
}

LinguisticReport HeuristicLinguistic(const Manuscript& m, SectionKind target,
                                     ContextMode mode, std::size_t window,
                                     const Lexicon& lexicon) {
  if (!IsSummaryKind(target)) {
    throw Error(ErrorCode::kInvalidArgument,
                "pronoun analysis targets Abstract or Conclusions, not " +
                    std::string(SectionKindName(target)));
  }
  const Section& section = LocateSection(m, target);
  if (mode == ContextMode::kFull && !m.HasImradContent()) {
    throw Error(ErrorCode::kContextMismatch,
                "full context needs the whole manuscript; only summary "
                "sections were supplied");
  }
  LinguisticReport report;
  report.target = target;
  report.context = mode;
  report.origin = ReportOrigin::kEngine;
  report.window = window;
  std::vector<Sentence> sentences = SegmentSentences(section.body, lexicon);
  for (const Sentence& s : sentences) {
    report.sentences.push_back(SentenceEntry{s.index, s.text});
  }
  for (const PronounOccurrence& p : DetectPronouns(sentences, target, lexicon)) {
    if (!NeedsAnalysis(p)) continue;
    report.findings.push_back(AnalyzePronoun(
        sentences[p.sentence_ref.index], p,
        ExtractAntecedentCandidates(sentences, p, window), lexicon));
  }
  DeriveFlags(report);
  return report;
}

ModelOutput HeuristicBackend::Execute(const AnalysisRequest& request) {
  ParseOptions options;
  options.format = GuessInputFormat(request.attachment);
  Manuscript m = ParseManuscript(request.attachment, options);

  ModelOutput out;
  if (request.kind == ReportKind::kIntegrity) {
    out.raw_text = RenderIntegrityText(HeuristicIntegrity(m, request.target));
  } else {
    out.raw_text = RenderLinguisticText(
        HeuristicLinguistic(m, request.target, request.context, request.window));
  }
  out.parsed = ParseStructuredText(out.raw_text, request.kind);
  out.metadata = RunMetadata{"", "heuristic", request.prompt_id, "", request.run_index};
  return out;
}

}  // namespace manucheck
