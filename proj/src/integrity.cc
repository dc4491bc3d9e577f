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

#include "manucheck/integrity.h"

#include <algorithm>

#include "manucheck/error.h"
#include "manucheck/gateway.h"
#include "manucheck/grammar.h"
#include "manucheck/heuristic.h"

namespace manucheck {
namespace {

std::vector<std::string> GroupKeys(const TaggedSentence& ts, TokenRange r) {
  std::vector<std::string> keys;
  for (std::size_t i = r.begin; i < r.end; ++i) {
    const Token& t = ts.tokens()[i];
    if (!t.is_word()) {
      if (t.text == "%" || t.text == "\xC2\xB0") keys.push_back(t.text);
      continue;
    }
    for (std::string& k : MatchKeys(t.text)) keys.push_back(std::move(k));
  }
  return keys;
}

TokenGroup MakeGroup(const TaggedSentence& ts, TokenRange r, GroupKind kind) {
  return TokenGroup{kind, ts.TextOf(r), GroupKeys(ts, r), ts.SpanOf(r)};
}

// Tokens forming "number unit" at i: "90 mL", "95 %", "4 °C", "90mL".
std::size_t QuantityLength(const TaggedSentence& ts, std::size_t i,
                           std::size_t end) {
  const Lexicon& lx = ts.lexicon();
  if (!ts.is_word(i)) return 0;
  if (ts.IsNumber(i)) {
    if (i + 1 >= end) return 0;
    const Token& next = ts.tokens()[i + 1];
    if (next.is_word() && lx.IsUnit(ts.folded(i + 1))) return 2;
    if (next.text == "%") return 2;
    if (next.text == "\xC2\xB0" && i + 2 < end && ts.is_word(i + 2) &&
        (ts.folded(i + 2) == "c" || ts.folded(i + 2) == "k" ||
         ts.folded(i + 2) == "f")) {
      return 3;
    }
    return 0;
  }
  const std::string& w = ts.tokens()[i].text;
  if (w.find('-') != std::string::npos) return 0;
  auto keys = MatchKeys(w);
  if (keys.size() == 2 && IsNumberKey(keys[0]) && lx.IsUnit(keys[1])) return 1;
  return 0;
}

// "40-fold", "3-step": a hyphenated token led by a number and a word.
bool IsNumericModifier(const TaggedSentence& ts, std::size_t i) {
  if (!ts.is_word(i)) return false;
  const std::string& w = ts.tokens()[i].text;
  if (w.find('-') == std::string::npos) return false;
  auto keys = MatchKeys(w);
  return keys.size() >= 2 && IsNumberKey(keys[0]) && keys[1].size() >= 3;
}

// Content run after optional determiners/hedges, starting at `start`.
TokenRange NounPhrase(const TaggedSentence& ts, std::size_t start,
                      std::size_t end) {
  std::size_t i = start;
  while (i < end && ts.is_word(i) &&
         (ts.lexicon().IsDeterminer(ts.folded(i)) ||
          ts.lexicon().IsHedge(ts.folded(i)))) {
    ++i;
  }
  std::size_t j = i;
  while (j < end && ts.IsContent(j)) ++j;
  return TokenRange{i, j};
}

TokenRange TrimClause(const TaggedSentence& ts, TokenRange r) {
  const Lexicon& lx = ts.lexicon();
  while (r.begin < r.end &&
         (!ts.is_word(r.begin) || lx.conjunctions.count(ts.folded(r.begin)))) {
    ++r.begin;
  }
  while (r.end > r.begin && !ts.is_word(r.end - 1)) --r.end;
  return r;
}

InformationUnit MakeUnit(const TaggedSentence& ts, TokenRange range,
                         TokenRange clause, std::vector<TokenGroup> groups) {
  InformationUnit u;
  Span span = ts.SpanOf(range);
  u.spans.push_back(span);
  u.text = std::string(Slice(ts.text(), span));
  u.gist = CollapseWhitespace(u.text);
  u.clause = ts.TextOf(TrimClause(ts, clause));
  u.groups = std::move(groups);
  return u;
}

bool MatchesCue(std::string_view haystack, std::string_view cue) {
  auto is_alnum = [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') ||
           static_cast<unsigned char>(c) >= 0x80;
  };
  std::size_t pos = haystack.find(cue);
  while (pos != std::string_view::npos) {
    bool left = pos == 0 || !is_alnum(haystack[pos - 1]);
    std::size_t end = pos + cue.size();
    bool right = end >= haystack.size() || !is_alnum(haystack[end]);
    if (left && right) return true;
    pos = haystack.find(cue, pos + 1);
  }
  return false;
}

}  // namespace

std::string_view GroupKindName(GroupKind kind) {
  switch (kind) {
    case GroupKind::kQuantity: return "quantity";
    case GroupKind::kModifier: return "modifier";
    case GroupKind::kNominal: return "nominal";
  }
  return "nominal";
}

std::string_view VerificationStatusName(VerificationStatus status) {
  switch (status) {
    case VerificationStatus::kSubstantiated: return "Substantiated";
    case VerificationStatus::kUnsubstantiated: return "Unsubstantiated";
    case VerificationStatus::kPartiallySubstantiated:
      return "Partially Substantiated";
  }
  return "Unsubstantiated";
}

VerificationStatus ParseVerificationStatus(std::string_view text) {
  std::string folded;
  for (char c : FoldCase(Trim(text))) {
    if (c != ' ' && c != '-' && c != '_') folded.push_back(c);
  }
  if (folded == "substantiated") return VerificationStatus::kSubstantiated;
  if (folded == "unsubstantiated") return VerificationStatus::kUnsubstantiated;
  if (folded == "partiallysubstantiated" || folded == "partial") {
    return VerificationStatus::kPartiallySubstantiated;
  }
  throw Error(ErrorCode::kParseFailure,
              "unknown verification status '" + std::string(text) + "'");
}

bool InformationUnit::HasQuantity() const {
  return std::any_of(groups.begin(), groups.end(), [](const TokenGroup& g) {
    return g.kind == GroupKind::kQuantity;
  });
}

std::vector<std::string> IntegrityReport::FlaggedPhrases() const {
  std::vector<std::string> out;
  for (const IntegrityFlag& f : flags) out.push_back(f.phrase);
  return out;
}

std::vector<InformationUnit> DecomposeIntoIus(const Sentence& sentence,
                                              SectionKind section,
                                              const Lexicon& lexicon) {
  TaggedSentence ts(sentence.text, lexicon);
  std::vector<InformationUnit> units;
  for (TokenRange clause : ts.Clauses()) {
    std::vector<InformationUnit> found;
    std::size_t i = clause.begin;
    while (i < clause.end) {
      if (std::size_t qlen = QuantityLength(ts, i, clause.end); qlen > 0) {
        TokenRange qty{i, i + qlen};
        TokenRange covered = qty;
        std::vector<TokenGroup> groups{MakeGroup(ts, qty, GroupKind::kQuantity)};
        std::size_t next = qty.end;
        if (next < clause.end && ts.folded(next) == "of") {
          TokenRange np = NounPhrase(ts, next + 1, clause.end);
          if (!np.empty() && IsNumericModifier(ts, np.begin)) {
            // The modifier phrase becomes its own unit on a later pass.
            next = np.begin;
          } else if (!np.empty()) {
            groups.push_back(MakeGroup(ts, np, GroupKind::kNominal));
            covered.end = np.end;
            next = np.end;
          }
        }
        found.push_back(MakeUnit(ts, covered, clause, std::move(groups)));
        i = next;
        continue;
      }
      if (IsNumericModifier(ts, i)) {
        std::size_t j = i + 1;
        while (j < clause.end && ts.IsContent(j)) ++j;
        // The qualifier ("40-fold enriched") is the verifiable part; the
        // head noun it qualifies is not checked on its own.
        std::size_t qualifier_end = j > i + 1 ? j - 1 : j;
        std::vector<TokenGroup> groups{
            MakeGroup(ts, TokenRange{i, qualifier_end}, GroupKind::kModifier)};
        found.push_back(MakeUnit(ts, TokenRange{i, j}, clause, std::move(groups)));
        i = j;
        continue;
      }
      ++i;
    }

    if (found.empty()) {
      TokenRange claim = TrimClause(ts, clause);
      if (claim.empty()) continue;
      std::vector<TokenGroup> groups;
      for (TokenRange chunk : ts.ContentChunks(claim)) {
        groups.push_back(MakeGroup(ts, chunk, GroupKind::kNominal));
      }
      if (groups.empty()) {
        // Clauses with no noun content ("We measured A") fall back to
        // their lexical verbs.
        for (std::size_t k = claim.begin; k < claim.end; ++k) {
          if (ts.IsVerbLike(k) && !lexicon.IsAuxiliary(ts.folded(k))) {
            groups.push_back(MakeGroup(ts, TokenRange{k, k + 1}, GroupKind::kNominal));
          }
        }
      }
      if (groups.empty()) continue;
      found.push_back(MakeUnit(ts, claim, clause, std::move(groups)));
    }
    for (auto& u : found) units.push_back(std::move(u));
  }

  std::string prefix = FoldCase(SectionKindName(section)) + ":" +
                       std::to_string(sentence.index + 1) + ".";
  for (std::size_t n = 0; n < units.size(); ++n) {
    units[n].id = prefix + std::to_string(n + 1);
    units[n].sentence_ref = SentenceRef{section, sentence.index};
  }
  return units;
}

CategoryAssignment ClassifyIu(const InformationUnit& unit,
                              const IuSchema& schema) {
  std::string haystack = FoldCase(unit.clause.empty() ? unit.text : unit.clause);
  std::vector<std::pair<int, std::string>> hits;
  for (const IUCategory& c : schema.categories()) {
    for (const std::string& cue : c.cues) {
      if (MatchesCue(haystack, cue)) {
        hits.emplace_back(c.id, cue);
        break;
      }
    }
  }
  CategoryAssignment a;
  if (hits.empty()) {
    a.category_id = 4;
    a.confidence = Confidence::kLow;
    a.rationale = "no category cue matched; treated as a key finding";
    return a;
  }
  a.category_id = hits.front().first;
  const std::string& name = schema.Get(a.category_id).name;
  if (hits.size() == 1) {
    a.confidence = Confidence::kHigh;
    a.rationale = "cue '" + hits.front().second + "' -> " + name;
    return a;
  }
  a.confidence = Confidence::kMedium;
  a.rationale = "cues for categories";
  for (std::size_t i = 0; i < hits.size(); ++i) {
    a.rationale += (i ? ", " : " ") + std::to_string(hits[i].first) + " ('" +
                   hits[i].second + "')";
  }
  a.rationale += "; lowest id wins -> " + name;
  return a;
}

EvidenceIndex::EvidenceIndex(const Manuscript& m, const Lexicon& lexicon) {
  for (const Section& s : m.sections) {
    if (!IsImradKind(s.kind)) continue;
    for (const Sentence& sent : SegmentSentences(s.body, lexicon)) {
      std::size_t offset = s.body_span.begin + sent.span.begin;
      Entry e{s.kind, sent.span.Shifted(s.body_span.begin), KeyTokens(sent.text)};
      for (KeyToken& k : e.keys) k.span = k.span.Shifted(offset);
      entries_.push_back(std::move(e));
    }
  }
}

bool MatchGroup(const TokenGroup& group, const std::vector<KeyToken>& keys,
                const Span& fallback, Span* matched) {
  if (group.keys.empty()) return false;
  if (group.kind == GroupKind::kNominal) {
    for (const std::string& k : group.keys) {
      std::string lemma = Lemma(k);
      bool present = std::any_of(keys.begin(), keys.end(), [&](const KeyToken& t) {
        return t.lemma == lemma;
      });
      if (!present) return false;
    }
    *matched = fallback;
    return true;
  }
  const std::size_t n = group.keys.size();
  for (std::size_t s = 0; s + n <= keys.size(); ++s) {
    bool ok = true;
    for (std::size_t j = 0; j < n && ok; ++j) ok = keys[s + j].key == group.keys[j];
    if (ok) {
      *matched = Span{keys[s].span.begin, keys[s + n - 1].span.end};
      return true;
    }
  }
  return false;
}

VerificationVerdict VerifyIu(const InformationUnit& unit, const Manuscript& m,
                             const IuSchema& schema) {
  return VerifyIu(unit, EvidenceIndex(m), schema);
}

VerificationVerdict VerifyIu(const InformationUnit& unit,
                             const EvidenceIndex& index, const IuSchema& schema) {
  if (index.empty()) {
    throw Error(ErrorCode::kNoImradContent,
                "manuscript has no Introduction, Methods, Results or Discussion "
                "content to verify against");
  }
  int category_id = unit.assignment.category_id;
  if (!schema.Contains(category_id)) category_id = ClassifyIu(unit, schema).category_id;
  const IUCategory& category = schema.Get(category_id);
  const bool exempt = category.id == 13 && !unit.HasQuantity();

  VerificationVerdict v;
  std::vector<std::optional<Evidence>> found(unit.groups.size());
  auto all_found = [&] {
    return std::all_of(found.begin(), found.end(),
                       [](const auto& e) { return e.has_value(); });
  };
  auto primaries_searched = [&] {
    return std::all_of(category.primary_locations.begin(),
                       category.primary_locations.end(), [&](SectionKind k) {
                         return std::find(v.searched.begin(), v.searched.end(),
                                          k) != v.searched.end();
                       });
  };
  for (SectionKind kind : CategorySearchTargets(category)) {
    v.searched.push_back(kind);
    for (const EvidenceIndex::Entry& entry : index.entries()) {
      if (entry.section != kind) continue;
      for (std::size_t g = 0; g < unit.groups.size(); ++g) {
        if (found[g]) continue;
        Span span;
        if (MatchGroup(unit.groups[g], entry.keys, entry.span, &span)) {
          found[g] = Evidence{kind, span, unit.groups[g].text};
        }
      }
    }
    if (all_found() && primaries_searched()) break;
  }

  std::vector<std::string> missing;
  for (std::size_t g = 0; g < found.size(); ++g) {
    if (found[g]) {
      v.evidence.push_back(*found[g]);
    } else {
      missing.push_back(unit.groups[g].text);
    }
  }
  if (v.evidence.empty()) {
    v.status = VerificationStatus::kUnsubstantiated;
  } else if (missing.empty() || exempt) {
    v.status = VerificationStatus::kSubstantiated;
  } else {
    v.status = VerificationStatus::kPartiallySubstantiated;
  }

  if (missing.empty()) {
    v.note = "all " + std::to_string(found.size()) +
             " token group(s) stated explicitly";
  } else {
    v.note = "not stated explicitly:";
    for (std::size_t i = 0; i < missing.size(); ++i) {
      v.note += (i ? ", '" : " '") + missing[i] + "'";
    }
    if (exempt && !v.evidence.empty()) {
      v.note += " (concluding remark without quantities; topical grounding accepted)";
    }
  }
  return v;
}

void DeriveFlags(IntegrityReport& report) {
  report.flags.clear();
  for (std::size_t i = 0; i < report.units.size(); ++i) {
    const UnitResult& r = report.units[i];
    if (r.verdict.status == VerificationStatus::kSubstantiated) continue;
    report.flags.push_back(IntegrityFlag{r.unit.gist, r.verdict.status, i});
  }
}

IntegrityReport RunIntegrityWorkflow(const Manuscript& m, SectionKind target,
                                     Backend& backend,
                                     std::size_t run_index) {
  if (!IsSummaryKind(target)) {
    throw Error(ErrorCode::kInvalidArgument,
                "integrity analysis targets Abstract or Conclusions, not " +
                    std::string(SectionKindName(target)));
  }
  const Section& section = LocateSection(m, target);
  if (!m.HasImradContent()) {
    throw Error(ErrorCode::kNoImradContent,
                "integrity analysis needs the full manuscript; only summary "
                "sections were supplied");
  }
  if (backend.mode() == BackendMode::kHeuristic) {
    return HeuristicIntegrity(m, target);
  }

  AnalysisRequest request = MakeIntegrityRequest(m, target);
  request.run_index = run_index;
  ModelOutput output = backend.Execute(request);
  StructuredReport parsed = ParseStructuredOutput(output, ReportKind::kIntegrity);

  IntegrityReport report;
  report.target = target;
  report.origin = ReportOrigin::kModel;
  for (const Sentence& s : SegmentSentences(section)) {
    report.sentences.push_back(SentenceEntry{s.index, s.text});
  }
  for (const ReportFlag& f : parsed.flags) {
    report.flags.push_back(IntegrityFlag{f.phrase, ParseVerificationStatus(f.status),
                                         std::nullopt});
  }
  return report;
}

}  // namespace manucheck
