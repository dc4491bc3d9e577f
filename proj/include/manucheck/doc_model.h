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

#ifndef MANUCHECK_DOC_MODEL_H_
#define MANUCHECK_DOC_MODEL_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "manucheck/lexicon.h"
#include "manucheck/text.h"

namespace manucheck {

enum class SectionKind {
  kAbstract,
  kIntroduction,
  kMethods,
  kResults,
  kDiscussion,
  kConclusions,
  kOther,
};

std::string_view SectionKindName(SectionKind kind);

// Accepts canonical names case-insensitively ("conclusions", "Methods").
std::optional<SectionKind> ParseSectionKind(std::string_view name);

bool IsImradKind(SectionKind kind);
bool IsSummaryKind(SectionKind kind);

// The four IMRaD kinds in document order.
const std::vector<SectionKind>& ImradKinds();

enum class InputFormat { kPlain, kMarkdown };

std::optional<InputFormat> ParseInputFormat(std::string_view name);

// Picks Markdown when any line carries an ATX heading, plain text otherwise.
InputFormat GuessInputFormat(std::string_view text);

// Case-insensitive heading -> kind table. Numbering ("2.1.") and trailing
// punctuation are stripped before lookup.
class HeadingAliases {
 public:
  static const HeadingAliases& Default();

  void Add(std::string_view alias, SectionKind kind);
  std::optional<SectionKind> Lookup(std::string_view heading) const;

  // Normalized lookup key of a heading line's text.
  static std::string Normalize(std::string_view heading);

 private:
  std::map<std::string, SectionKind> table_;
};

struct Section {
  SectionKind kind = SectionKind::kOther;
  std::string label;    // heading text without markup or numbering
  std::string heading;  // heading text as written, without '#' markers
  std::string body;     // trimmed text between this heading and the next
  Span span;            // heading line start .. body end, in raw_text
  Span body_span;       // body position in raw_text

  std::string DisplayName() const;
};

struct Sentence {
  std::size_t index = 0;
  std::string text;
  Span span;  // relative to the section body
};

struct Manuscript {
  std::string source_id;
  std::string raw_text;  // NFC-normalized input
  std::vector<Section> sections;

  bool HasImradContent() const;
};

struct ParseOptions {
  InputFormat format = InputFormat::kMarkdown;
  const HeadingAliases* aliases = nullptr;  // null: HeadingAliases::Default()
  std::string source_id;
};

// Throws Error(kInvalidArgument) on empty input and Error(kNoHeadingsFound)
// when no heading line is detected.
Manuscript ParseManuscript(std::string_view text, const ParseOptions& options);

// First section of `kind` in document order; Error(kSectionNotFound) if none.
const Section& LocateSection(const Manuscript& m, SectionKind kind);

std::vector<Sentence> SegmentSentences(const Section& section);
std::vector<Sentence> SegmentSentences(std::string_view body,
                                       const Lexicon& lexicon);

// Markdown rendering ("## heading" per section) that parses back to the same
// kinds and bodies.
std::string SerializeManuscript(const Manuscript& m);

// Wraps a summary text that carries no headings as a manuscript holding one
// section of `kind`.
Manuscript ManuscriptFromSection(std::string_view body, SectionKind kind,
                                 std::string source_id = "");

}  // namespace manucheck

#endif  // MANUCHECK_DOC_MODEL_H_
