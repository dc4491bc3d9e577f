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

#ifndef MANUCHECK_LEXICON_H_
#define MANUCHECK_LEXICON_H_

#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace manucheck {

// Word lists driving the deterministic rules: sentence splitting, clause
// splitting, pronoun handling and evidence matching. All entries are stored
// case-folded.
struct Lexicon {
  using WordSet = std::unordered_set<std::string>;

  std::string version;
  std::vector<std::string> abbreviations;
  WordSet finding_verbs;
  WordSet interpretive_verbs;  // lemmas
  WordSet verbs;
  WordSet auxiliaries;
  std::vector<std::string> expletive_copulas;  // may be two words
  WordSet expletive_complementizers;
  int expletive_max_gap = 4;
  WordSet personal_pronouns;
  WordSet demonstratives;
  WordSet subject_pronouns;
  WordSet determiners;
  WordSet prepositions;
  WordSet conjunctions;
  WordSet hedges;
  WordSet stopwords;
  WordSet units;

  bool IsStopword(std::string_view w) const;
  bool IsPreposition(std::string_view w) const;
  bool IsDeterminer(std::string_view w) const;
  bool IsAuxiliary(std::string_view w) const;
  bool IsUnit(std::string_view w) const;
  bool IsHedge(std::string_view w) const;

  // The lexicon compiled into the library.
  static const Lexicon& Default();

  // Parses a lexicon asset; throws Error(kLexiconCorrupt) when a required
  // list is missing or empty.
  static Lexicon FromJson(std::string_view json_text);
  static Lexicon FromFile(const std::string& path);
};

}  // namespace manucheck

#endif  // MANUCHECK_LEXICON_H_
