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

#ifndef MANUCHECK_LINGUISTIC_H_
#define MANUCHECK_LINGUISTIC_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "manucheck/doc_model.h"
#include "manucheck/integrity.h"
#include "manucheck/lexicon.h"
#include "manucheck/types.h"

namespace manucheck {

class Backend;

inline constexpr std::size_t kDefaultWindow = 2;

struct PronounOccurrence {
  std::string lexeme;  // as written
  SentenceRef sentence_ref;
  std::size_t token = 0;  // token index within the sentence
  Span span;              // within the sentence
  bool standalone = false;
  bool expletive = false;
  std::string head;  // governed head noun of a determiner use
};

// Pronominal uses that get a sufficiency check: non-expletive personal
// pronouns and standalone demonstratives.
bool NeedsAnalysis(const PronounOccurrence& p);

enum class ComponentRole { kAction, kConcept, kScopeModifier, kOtherModifier };

std::string_view ComponentRoleName(ComponentRole role);
std::optional<ComponentRole> ParseComponentRole(std::string_view name);

struct Component {
  ComponentRole role = ComponentRole::kConcept;
  std::string text;
  Span span;  // within the sentence
  std::string head;
  std::vector<std::string> modifiers;  // content-word lemmas besides the head
};

struct PronounContext {
  std::optional<Component> action;
  std::vector<Component> substantive;
};

struct AntecedentCandidate {
  SentenceRef sentence_ref;
  Span span;  // sentence span within the section body
  std::string text;
};

enum class Branch { kAction, kSubstantive };
enum class SupportStatus { kSupported, kUnsupported };

std::string_view BranchName(Branch branch);
std::string_view SupportStatusName(SupportStatus status);
SupportStatus ParseSupportStatus(std::string_view text);

struct ComponentEvidence {
  SentenceRef sentence_ref;
  Span span;
};

struct ComponentVerdict {
  Component component;
  Branch branch = Branch::kSubstantive;
  SupportStatus status = SupportStatus::kUnsupported;
  std::optional<ComponentEvidence> evidence;
};

enum class AmbiguityVerdict { kAdequate, kAmbiguous };

std::string_view AmbiguityVerdictName(AmbiguityVerdict verdict);

struct AmbiguityFinding {
  PronounOccurrence pronoun;
  AmbiguityVerdict verdict = AmbiguityVerdict::kAmbiguous;
  PronounContext context;
  std::vector<AntecedentCandidate> candidates;
  std::vector<ComponentVerdict> component_verdicts;
  std::string explanation;
};

struct FlaggedComponent {
  ComponentRole role = ComponentRole::kConcept;
  std::string text;
  SupportStatus status = SupportStatus::kUnsupported;
};

struct PronounFlag {
  std::string pronoun;
  std::optional<std::size_t> sentence;  // 0-based
  std::vector<FlaggedComponent> components;
};

// Engine reports carry findings and derive flags from the Ambiguous ones;
// model reports carry only the flags the model listed.
struct LinguisticReport {
  SectionKind target = SectionKind::kConclusions;
  ContextMode context = ContextMode::kLimited;
  ReportOrigin origin = ReportOrigin::kEngine;
  std::size_t window = kDefaultWindow;
  std::vector<SentenceEntry> sentences;
  std::vector<AmbiguityFinding> findings;
  std::vector<PronounFlag> flags;
};

// it/they/them anywhere, this/these/those anywhere, "that" only when it
// opens the sentence.
std::vector<PronounOccurrence> DetectPronouns(
    const std::vector<Sentence>& sentences, SectionKind section,
    const Lexicon& lexicon = Lexicon::Default());
std::vector<PronounOccurrence> DetectPronouns(
    const Section& section, const Lexicon& lexicon = Lexicon::Default());

// Splits the pronoun's clause into action and substantive components.
// Error(kClauseParseFailure) when the clause has no verb;
// Error(kInvalidArgument) for expletive occurrences.
PronounContext DeconstructPronounContext(
    const Sentence& sentence, const PronounOccurrence& p,
    const Lexicon& lexicon = Lexicon::Default());

// The `window` sentences before the pronoun's sentence, nearest first.
std::vector<AntecedentCandidate> ExtractAntecedentCandidates(
    const std::vector<Sentence>& sentences, const PronounOccurrence& p,
    std::size_t window);
std::vector<AntecedentCandidate> ExtractAntecedentCandidates(
    const Section& section, const PronounOccurrence& p, std::size_t window);

// One verdict per component; the action is checked on the action branch.
std::vector<ComponentVerdict> CheckComponentSufficiency(
    const PronounContext& ctx, const std::vector<AntecedentCandidate>& candidates,
    const Lexicon& lexicon = Lexicon::Default());

// Builds the finding for one occurrence from its sentence and candidates.
AmbiguityFinding AnalyzePronoun(const Sentence& sentence,
                                const PronounOccurrence& p,
                                std::vector<AntecedentCandidate> candidates,
                                const Lexicon& lexicon = Lexicon::Default());

// Limited mode analyzes the target section alone; full mode requires IMRaD
// content (Error(kContextMismatch) otherwise) and sends the whole manuscript.
// Errors: kInvalidArgument for a non-summary target, kSectionNotFound,
// backend failures.
LinguisticReport RunLinguisticWorkflow(const Manuscript& m, SectionKind target,
                                       ContextMode mode, Backend& backend,
                                       std::size_t window = kDefaultWindow,
                                       std::size_t run_index = 0);

// Rebuilds flags from findings; the only way engine reports set flags.
void DeriveFlags(LinguisticReport& report);

}  // namespace manucheck

#endif  // MANUCHECK_LINGUISTIC_H_
