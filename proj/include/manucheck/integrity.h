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

#ifndef MANUCHECK_INTEGRITY_H_
#define MANUCHECK_INTEGRITY_H_

#include <optional>
#include <string>
#include <vector>

#include "manucheck/doc_model.h"
#include "manucheck/iu_schema.h"
#include "manucheck/lexicon.h"
#include "manucheck/types.h"

namespace manucheck {

class Backend;

// A verifiable piece of an Information Unit. Quantities ("90 mL") and
// numeric modifiers ("40-fold") must match as contiguous key sequences;
// nominal groups ("enriched water") match when all their lemmas occur in one
// sentence of the searched section.
enum class GroupKind { kQuantity, kModifier, kNominal };

std::string_view GroupKindName(GroupKind kind);

struct TokenGroup {
  GroupKind kind = GroupKind::kNominal;
  std::string text;
  std::vector<std::string> keys;
  Span span;  // within the sentence
};

struct InformationUnit {
  std::string id;
  SentenceRef sentence_ref;
  std::vector<Span> spans;  // within the sentence
  std::string text;         // surface text covered by the spans
  std::string gist;         // whitespace-normalized text
  std::string clause;       // enclosing clause, used for classification cues
  std::vector<TokenGroup> groups;
  CategoryAssignment assignment;

  bool HasQuantity() const;
};

enum class VerificationStatus {
  kSubstantiated,
  kUnsubstantiated,
  kPartiallySubstantiated,
};

std::string_view VerificationStatusName(VerificationStatus status);

// Case-insensitive; accepts "partially substantiated" with or without a
// space or hyphen. Error(kParseFailure) otherwise.
VerificationStatus ParseVerificationStatus(std::string_view text);

struct Evidence {
  SectionKind section = SectionKind::kOther;
  Span span;           // in Manuscript::raw_text
  std::string group;   // text of the matched token group
};

struct VerificationVerdict {
  VerificationStatus status = VerificationStatus::kUnsubstantiated;
  std::vector<Evidence> evidence;
  std::vector<SectionKind> searched;
  std::string note;
};

struct UnitResult {
  InformationUnit unit;
  VerificationVerdict verdict;
};

struct IntegrityFlag {
  std::string phrase;
  VerificationStatus status = VerificationStatus::kUnsubstantiated;
  std::optional<std::size_t> unit;  // index into units (engine reports)
};

struct SentenceEntry {
  std::size_t index = 0;
  std::string text;
};

// Engine reports carry every unit with its verdict and derive flags from
// them; model reports carry only the flags the model listed.
struct IntegrityReport {
  SectionKind target = SectionKind::kConclusions;
  ReportOrigin origin = ReportOrigin::kEngine;
  std::vector<SentenceEntry> sentences;
  std::vector<UnitResult> units;
  std::vector<IntegrityFlag> flags;

  std::vector<std::string> FlaggedPhrases() const;
};

// Splits a sentence into Information Units: one per quantity, one per
// numeric modifier phrase, and one per remaining clause when a clause holds
// neither.
std::vector<InformationUnit> DecomposeIntoIus(
    const Sentence& sentence, SectionKind section,
    const Lexicon& lexicon = Lexicon::Default());

// Cue-phrase classification with lowest-id tie-break. Units that match no
// cue default to Key Finding with low confidence.
CategoryAssignment ClassifyIu(const InformationUnit& unit,
                              const IuSchema& schema);

// Sentence-level index over the IMRaD sections of a manuscript.
class EvidenceIndex {
 public:
  struct Entry {
    SectionKind section;
    Span span;  // sentence span in raw_text
    std::vector<KeyToken> keys;  // spans in raw_text
  };

  explicit EvidenceIndex(const Manuscript& m,
                         const Lexicon& lexicon = Lexicon::Default());

  const std::vector<Entry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

 private:
  std::vector<Entry> entries_;
};

// Finds `group` among `keys`; on success sets `*matched` to the span of the
// matching keys (contiguous kinds) or to `fallback` (nominal kind).
bool MatchGroup(const TokenGroup& group, const std::vector<KeyToken>& keys,
                const Span& fallback, Span* matched);

// Throws Error(kNoImradContent) when the manuscript has no IMRaD section.
VerificationVerdict VerifyIu(const InformationUnit& unit, const Manuscript& m,
                             const IuSchema& schema);
VerificationVerdict VerifyIu(const InformationUnit& unit,
                             const EvidenceIndex& index, const IuSchema& schema);

// Locate -> segment -> decompose -> classify -> verify. With the heuristic
// backend every step runs locally; with replay or live backends the
// integrity prompt is rendered, executed and its flag list parsed.
// Errors: kInvalidArgument for a non-summary target, kSectionNotFound,
// kNoImradContent, backend failures.
IntegrityReport RunIntegrityWorkflow(const Manuscript& m, SectionKind target,
                                     Backend& backend,
                                     std::size_t run_index = 0);

// Rebuilds flags from units; the only way engine reports set flags.
void DeriveFlags(IntegrityReport& report);

}  // namespace manucheck

#endif  // MANUCHECK_INTEGRITY_H_
