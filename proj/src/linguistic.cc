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

#include "manucheck/linguistic.h"

#include <algorithm>
#include <set>

#include "manucheck/error.h"
#include "manucheck/gateway.h"
#include "manucheck/grammar.h"
#include "manucheck/heuristic.h"

namespace manucheck {
namespace {

bool EndsWith(std::string_view s, std::string_view suffix) {
  return s.size() > suffix.size() &&
         s.substr(s.size() - suffix.size()) == suffix;
}

// Inflection-insensitive verb key: "illustrates", "illustrated" and
// "illustrating" share "illustrat".
std::string VerbStem(std::string_view w) {
  for (std::string_view suffix : {"ing", "ed", "es", "s", "e"}) {
    if (w.size() > suffix.size() + 3 && EndsWith(w, suffix)) {
      return std::string(w.substr(0, w.size() - suffix.size()));
    }
  }
  return std::string(w);
}

bool IsInterpretive(const Lexicon& lx, std::string_view verb) {
  std::string stem = VerbStem(verb);
  for (const std::string& v : lx.interpretive_verbs) {
    if (v == verb || VerbStem(v) == stem) return true;
  }
  return false;
}

bool IsPredicate(const TaggedSentence& ts, std::size_t i) {
  return ts.is_word(i) &&
         (ts.IsVerbLike(i) || ts.lexicon().IsAuxiliary(ts.folded(i)));
}

bool IsExpletive(const TaggedSentence& ts, std::size_t i) {
  const Lexicon& lx = ts.lexicon();
  if (ts.folded(i) != "it") return false;
  const std::size_t n = ts.size();
  std::size_t after = 0;
  for (const std::string& copula : lx.expletive_copulas) {
    std::size_t words = std::count(copula.begin(), copula.end(), ' ') + 1;
    if (i + words >= n) continue;
    std::string joined;
    bool ok = true;
    for (std::size_t k = 1; k <= words && ok; ++k) {
      ok = ts.is_word(i + k);
      if (!joined.empty()) joined += ' ';
      joined += ts.folded(i + k);
    }
    if (ok && joined == copula) {
      after = std::max(after, i + words + 1);
    }
  }
  if (after == 0) return false;
  for (std::size_t k = after; k < n && k <= after + lx.expletive_max_gap; ++k) {
    if (!ts.is_word(k)) return false;
    if (lx.expletive_complementizers.count(ts.folded(k))) return true;
    if (ts.IsVerbLike(k)) {
      // Reporting passives: "it should be noted that", "it was found that".
      return k + 1 < n && ts.folded(k + 1) == "that";
    }
  }
  return false;
}

// Whether a demonstrative at i stands alone rather than determining a noun.
bool IsStandalone(const TaggedSentence& ts, std::size_t i, std::string* head) {
  const Lexicon& lx = ts.lexicon();
  const std::size_t j = i + 1;
  if (j >= ts.size() || !ts.is_word(j)) return true;
  const std::string& w = ts.folded(j);
  if (ts.IsVerbLike(j) || ts.IsAdverb(j) || lx.IsPreposition(w) ||
      lx.IsAuxiliary(w) || lx.conjunctions.count(w)) {
    return true;
  }
  if (w.size() > 3 && EndsWith(w, "s") && !EndsWith(w, "ss")) {
    // "This explains the ...": a bare -s form followed by a determiner,
    // a preposition or punctuation is a verb.
    std::size_t k = j + 1;
    if (k >= ts.size() || !ts.is_word(k) || lx.IsDeterminer(ts.folded(k)) ||
        lx.IsPreposition(ts.folded(k))) {
      return true;
    }
  }
  std::size_t end = j;
  while (end < ts.size() && ts.IsContent(end)) ++end;
  if (end == j) return true;
  *head = ts.tokens()[end - 1].text;
  return false;
}

Component MakeComponent(const TaggedSentence& ts, ComponentRole role,
                        TokenRange r, std::size_t head) {
  Component c;
  c.role = role;
  c.span = ts.SpanOf(r);
  c.text = ts.TextOf(r);
  c.head = ts.tokens()[head].text;
  std::set<std::string> seen;
  auto head_keys = MatchKeys(ts.tokens()[head].text);
  for (std::size_t i = r.begin; i < r.end; ++i) {
    if (i == head || !ts.IsContent(i)) continue;
    for (const std::string& k : MatchKeys(ts.tokens()[i].text)) {
      std::string lemma = Lemma(k);
      if (seen.insert(lemma).second) c.modifiers.push_back(lemma);
    }
  }
  return c;
}

struct PrepPhrase {
  std::size_t prep;
  std::size_t begin;  // first content token of the complement
  std::size_t end;
};

void ParseObject(const TaggedSentence& ts, std::size_t start, std::size_t end,
                 PronounContext* ctx) {
  const Lexicon& lx = ts.lexicon();
  while (end > start && !ts.is_word(end - 1)) --end;
  std::size_t a = start;
  while (a < end && ts.is_word(a) &&
         (lx.IsDeterminer(ts.folded(a)) || lx.IsHedge(ts.folded(a)) ||
          ts.IsAdverb(a))) {
    ++a;
  }
  std::size_t b = a;
  while (b < end && ts.IsContent(b)) ++b;
  if (a == b) return;
  const std::size_t head = b - 1;
  if (head > a) {
    ctx->substantive.push_back(MakeComponent(
        ts, ComponentRole::kOtherModifier, TokenRange{a, head}, head - 1));
  }

  std::vector<PrepPhrase> pps;
  std::size_t k = b;
  while (k < end && ts.is_word(k) && lx.IsPreposition(ts.folded(k))) {
    std::size_t c = k + 1;
    while (c < end && ts.is_word(c) &&
           (lx.IsDeterminer(ts.folded(c)) || lx.IsHedge(ts.folded(c)))) {
      ++c;
    }
    std::size_t d = c;
    while (d < end && ts.IsContent(d)) ++d;
    if (d == c) break;
    pps.push_back(PrepPhrase{k, c, d});
    k = d;
  }

  auto first_other = std::find_if(pps.begin(), pps.end(), [&](const PrepPhrase& p) {
    return ts.folded(p.prep) != "of";
  });
  std::size_t concept_end = head + 1;
  if (first_other != pps.end() && first_other != pps.begin()) {
    concept_end = std::prev(first_other)->end;
  }
  ctx->substantive.insert(
      ctx->substantive.begin(),
      MakeComponent(ts, ComponentRole::kConcept, TokenRange{head, concept_end}, head));
  if (pps.empty()) return;
  TokenRange scope;
  if (first_other != pps.end()) {
    scope = TokenRange{first_other->begin, pps.back().end};
  } else {
    scope = TokenRange{pps.front().prep, pps.back().end};
  }
  std::size_t scope_head = scope.begin;
  while (scope_head < scope.end && !ts.IsContent(scope_head)) ++scope_head;
  ctx->substantive.push_back(
      MakeComponent(ts, ComponentRole::kScopeModifier, scope, scope_head));
}

std::set<std::string> LemmaSet(std::string_view text) {
  std::set<std::string> out;
  for (const KeyToken& k : KeyTokens(text)) out.insert(k.lemma);
  return out;
}

bool SubstantiveSupported(const Component& c, const std::set<std::string>& lemmas) {
  for (const std::string& k : MatchKeys(c.head)) {
    if (!lemmas.count(Lemma(k))) return false;
  }
  std::size_t matched = std::count_if(
      c.modifiers.begin(), c.modifiers.end(),
      [&](const std::string& m) { return lemmas.count(m) > 0; });
  return matched * 2 >= c.modifiers.size();
}

bool ActionSupported(const Component& action, std::string_view candidate,
                     const Lexicon& lx) {
  std::string verb = FoldCase(action.head);
  bool interpretive = IsInterpretive(lx, verb);
  std::string stem = VerbStem(verb);
  for (const Token& t : Tokenize(candidate)) {
    if (!t.is_word()) continue;
    std::string w = FoldCase(t.text);
    if (interpretive ? lx.finding_verbs.count(w) > 0 : VerbStem(w) == stem) {
      return true;
    }
  }
  return false;
}

std::string Quote(const Component& c) {
  return std::string(ComponentRoleName(c.role)) + " '" + c.text + "'";
}

}  // namespace

bool NeedsAnalysis(const PronounOccurrence& p) {
  if (p.expletive) return false;
  std::string w = FoldCase(p.lexeme);
  bool personal = w == "it" || w == "they" || w == "them";
  return personal || p.standalone;
}

std::string_view ComponentRoleName(ComponentRole role) {
  switch (role) {
    case ComponentRole::kAction: return "action";
    case ComponentRole::kConcept: return "concept";
    case ComponentRole::kScopeModifier: return "scope_modifier";
    case ComponentRole::kOtherModifier: return "other_modifier";
  }
  return "concept";
}

std::optional<ComponentRole> ParseComponentRole(std::string_view name) {
  std::string folded;
  for (char c : FoldCase(Trim(name))) folded.push_back(c == ' ' || c == '-' ? '_' : c);
  for (ComponentRole r : {ComponentRole::kAction, ComponentRole::kConcept,
                          ComponentRole::kScopeModifier,
                          ComponentRole::kOtherModifier}) {
    if (ComponentRoleName(r) == folded) return r;
  }
  if (folded == "action/verb" || folded == "verb") return ComponentRole::kAction;
  return std::nullopt;
}

std::string_view BranchName(Branch branch) {
  return branch == Branch::kAction ? "action_branch" : "substantive_branch";
}

std::string_view SupportStatusName(SupportStatus status) {
  return status == SupportStatus::kSupported ? "Supported" : "Unsupported";
}

SupportStatus ParseSupportStatus(std::string_view text) {
  std::string folded = FoldCase(Trim(text));
  if (folded == "supported") return SupportStatus::kSupported;
  if (folded == "unsupported" || folded == "not supported") {
    return SupportStatus::kUnsupported;
  }
  throw Error(ErrorCode::kParseFailure,
              "unknown support status '" + std::string(text) + "'");
}

std::string_view AmbiguityVerdictName(AmbiguityVerdict verdict) {
  return verdict == AmbiguityVerdict::kAdequate ? "Adequate" : "Ambiguous";
}

std::vector<PronounOccurrence> DetectPronouns(
    const std::vector<Sentence>& sentences, SectionKind section,
    const Lexicon& lexicon) {
  std::vector<PronounOccurrence> out;
  for (const Sentence& s : sentences) {
    TaggedSentence ts(s.text, lexicon);
    std::size_t first_word = 0;
    while (first_word < ts.size() && !ts.is_word(first_word)) ++first_word;
    for (std::size_t i = 0; i < ts.size(); ++i) {
      if (!ts.is_word(i)) continue;
      const std::string& w = ts.folded(i);
      bool personal = lexicon.personal_pronouns.count(w) > 0;
      bool demonstrative = lexicon.demonstratives.count(w) > 0;
      if (w == "that" && i != first_word) demonstrative = false;
      if (!personal && !demonstrative) continue;
      PronounOccurrence p;
      p.lexeme = ts.tokens()[i].text;
      p.sentence_ref = SentenceRef{section, s.index};
      p.token = i;
      p.span = ts.tokens()[i].span;
      if (personal) {
        p.expletive = IsExpletive(ts, i);
      } else {
        p.standalone = IsStandalone(ts, i, &p.head);
      }
      out.push_back(std::move(p));
    }
  }
  return out;
}

std::vector<PronounOccurrence> DetectPronouns(const Section& section,
                                              const Lexicon& lexicon) {
  return DetectPronouns(SegmentSentences(section.body, lexicon), section.kind,
                        lexicon);
}

PronounContext DeconstructPronounContext(const Sentence& sentence,
                                         const PronounOccurrence& p,
                                         const Lexicon& lexicon) {
  if (p.expletive) {
    throw Error(ErrorCode::kInvalidArgument,
                "expletive '" + p.lexeme + "' has no pronoun context");
  }
  TaggedSentence ts(sentence.text, lexicon);
  TokenRange clause = ts.ClauseOf(p.token);
  PronounContext ctx;

  std::optional<std::size_t> before, after;
  for (std::size_t i = clause.begin; i < p.token; ++i) {
    if (IsPredicate(ts, i)) before = i;
  }
  for (std::size_t i = p.token + 1; i < clause.end; ++i) {
    if (IsPredicate(ts, i)) {
      after = i;
      break;
    }
  }

  std::size_t object_start = 0;
  std::size_t action = 0;
  if (!before && after) {
    action = *after;
    if (lexicon.IsAuxiliary(ts.folded(action))) {
      // "This was confirmed by ...": the participle carries the action.
      std::size_t k = action + 1;
      while (k < clause.end && ts.is_word(k) &&
             (ts.IsAdverb(k) || lexicon.IsAuxiliary(ts.folded(k)))) {
        ++k;
      }
      if (k < clause.end && ts.IsVerbLike(k)) action = k;
    }
    object_start = action + 1;
  } else if (before) {
    action = *before;
    std::vector<TokenRange> chunks =
        ts.ContentChunks(TokenRange{clause.begin, action});
    if (!chunks.empty()) {
      TokenRange subject{chunks.front().begin, chunks.back().end};
      ctx.substantive.push_back(MakeComponent(ts, ComponentRole::kOtherModifier,
                                              subject, subject.end - 1));
    }
    object_start = p.token + 1;
  } else {
    throw Error(ErrorCode::kClauseParseFailure,
                "no verb in the clause of '" + p.lexeme + "' in \"" +
                    sentence.text + "\"");
  }

  Component a;
  a.role = ComponentRole::kAction;
  a.text = ts.tokens()[action].text;
  a.head = a.text;
  a.span = ts.tokens()[action].span;
  ctx.action = a;

  PronounContext object;
  ParseObject(ts, object_start, clause.end, &object);
  for (Component& c : object.substantive) ctx.substantive.push_back(std::move(c));
  return ctx;
}

std::vector<AntecedentCandidate> ExtractAntecedentCandidates(
    const std::vector<Sentence>& sentences, const PronounOccurrence& p,
    std::size_t window) {
  std::vector<AntecedentCandidate> out;
  std::size_t idx = p.sentence_ref.index;
  for (std::size_t back = 1; back <= window && back <= idx; ++back) {
    const Sentence& s = sentences.at(idx - back);
    out.push_back(AntecedentCandidate{SentenceRef{p.sentence_ref.section, s.index},
                                      s.span, s.text});
  }
  return out;
}

std::vector<AntecedentCandidate> ExtractAntecedentCandidates(
    const Section& section, const PronounOccurrence& p, std::size_t window) {
  return ExtractAntecedentCandidates(SegmentSentences(section), p, window);
}

std::vector<ComponentVerdict> CheckComponentSufficiency(
    const PronounContext& ctx, const std::vector<AntecedentCandidate>& candidates,
    const Lexicon& lexicon) {
  std::vector<std::set<std::string>> lemmas;
  for (const AntecedentCandidate& c : candidates) lemmas.push_back(LemmaSet(c.text));

  std::vector<ComponentVerdict> out;
  if (ctx.action) {
    ComponentVerdict v{*ctx.action, Branch::kAction, SupportStatus::kUnsupported, {}};
    for (const AntecedentCandidate& c : candidates) {
      if (ActionSupported(*ctx.action, c.text, lexicon)) {
        v.status = SupportStatus::kSupported;
        v.evidence = ComponentEvidence{c.sentence_ref, c.span};
        break;
      }
    }
    out.push_back(std::move(v));
  }
  for (const Component& comp : ctx.substantive) {
    ComponentVerdict v{comp, Branch::kSubstantive, SupportStatus::kUnsupported, {}};
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (SubstantiveSupported(comp, lemmas[i])) {
        v.status = SupportStatus::kSupported;
        v.evidence = ComponentEvidence{candidates[i].sentence_ref, candidates[i].span};
        break;
      }
    }
    out.push_back(std::move(v));
  }
  return out;
}

AmbiguityFinding AnalyzePronoun(const Sentence& sentence,
                                const PronounOccurrence& p,
                                std::vector<AntecedentCandidate> candidates,
                                const Lexicon& lexicon) {
  AmbiguityFinding f;
  f.pronoun = p;
  f.candidates = std::move(candidates);
  try {
    f.context = DeconstructPronounContext(sentence, p, lexicon);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kClauseParseFailure) throw;
    f.verdict = AmbiguityVerdict::kAmbiguous;
    f.explanation = "clause could not be deconstructed (no verb found)";
    return f;
  }
  f.component_verdicts = CheckComponentSufficiency(f.context, f.candidates, lexicon);

  std::vector<std::string> unsupported;
  for (const ComponentVerdict& v : f.component_verdicts) {
    if (v.status == SupportStatus::kUnsupported) unsupported.push_back(Quote(v.component));
  }
  if (f.candidates.empty()) {
    f.verdict = AmbiguityVerdict::kAmbiguous;
    f.explanation = "no preceding sentence within the window";
  } else if (!unsupported.empty()) {
    f.verdict = AmbiguityVerdict::kAmbiguous;
    f.explanation = "not explicitly supported by the preceding text:";
    for (std::size_t i = 0; i < unsupported.size(); ++i) {
      f.explanation += (i ? ", " : " ") + unsupported[i];
    }
  } else {
    f.verdict = AmbiguityVerdict::kAdequate;
    f.explanation = "all " + std::to_string(f.component_verdicts.size()) +
                    " component(s) supported by the preceding text";
  }
  return f;
}

void DeriveFlags(LinguisticReport& report) {
  report.flags.clear();
  for (const AmbiguityFinding& f : report.findings) {
    if (f.verdict != AmbiguityVerdict::kAmbiguous) continue;
    PronounFlag flag{f.pronoun.lexeme, f.pronoun.sentence_ref.index, {}};
    for (const ComponentVerdict& v : f.component_verdicts) {
      if (v.status == SupportStatus::kSupported) continue;
      flag.components.push_back(
          FlaggedComponent{v.component.role, v.component.text, v.status});
    }
    report.flags.push_back(std::move(flag));
  }
}

LinguisticReport RunLinguisticWorkflow(const Manuscript& m, SectionKind target,
                                       ContextMode mode, Backend& backend,
                                       std::size_t window,
                                       std::size_t run_index) {
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
  if (backend.mode() == BackendMode::kHeuristic) {
    return HeuristicLinguistic(m, target, mode, window);
  }

  AnalysisRequest request = MakeLinguisticRequest(m, target, mode, window);
  request.run_index = run_index;
  ModelOutput output = backend.Execute(request);
  StructuredReport parsed = ParseStructuredOutput(output, ReportKind::kLinguistic);

  LinguisticReport report;
  report.target = target;
  report.context = mode;
  report.origin = ReportOrigin::kModel;
  report.window = window;
  for (const Sentence& s : SegmentSentences(section)) {
    report.sentences.push_back(SentenceEntry{s.index, s.text});
  }
  for (const ReportFlag& f : parsed.flags) {
    PronounFlag flag{f.phrase, f.sentence, {}};
    for (const ReportComponent& c : f.components) {
      flag.components.push_back(FlaggedComponent{
          ParseComponentRole(c.role).value_or(ComponentRole::kOtherModifier),
          c.text, c.status == "Supported" ? SupportStatus::kSupported
                                          : SupportStatus::kUnsupported});
    }
    report.flags.push_back(std::move(flag));
  }
  return report;
}

}  // namespace manucheck
