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

#ifndef MANUCHECK_GRAMMAR_H_
#define MANUCHECK_GRAMMAR_H_

#include <cstddef>
#include <string>
#include <vector>

#include "manucheck/lexicon.h"
#include "manucheck/text.h"

namespace manucheck {

// Half-open token index range.
struct TokenRange {
  std::size_t begin = 0;
  std::size_t end = 0;

  bool empty() const { return begin >= end; }
};

// Shallow lexicon-driven tagging of one sentence. No parser: every decision
// is a word-list lookup or a suffix test on a neighbouring token.
class TaggedSentence {
 public:
  TaggedSentence(std::string_view text, const Lexicon& lexicon);

  const std::vector<Token>& tokens() const { return tokens_; }
  std::size_t size() const { return tokens_.size(); }
  const std::string& folded(std::size_t i) const { return folded_[i]; }
  bool is_word(std::size_t i) const { return tokens_[i].is_word(); }
  std::string_view text() const { return text_; }

  bool IsAdverb(std::size_t i) const;
  bool IsVerbLike(std::size_t i) const;
  bool IsFunctionWord(std::size_t i) const;
  // Nouns, adjectives and numbers: anything that can carry claim content.
  bool IsContent(std::size_t i) const;
  bool IsNumber(std::size_t i) const;

  // Clauses split at ';' and at coordinating conjunctions that introduce
  // a new finite verb (or a new pronoun subject).
  std::vector<TokenRange> Clauses() const;
  TokenRange ClauseOf(std::size_t token) const;

  // Maximal runs of content tokens inside `range`.
  std::vector<TokenRange> ContentChunks(TokenRange range) const;

  Span SpanOf(TokenRange range) const;
  std::string TextOf(TokenRange range) const;

  const Lexicon& lexicon() const { return *lexicon_; }

 private:
  bool HasFiniteVerb(TokenRange range) const;

  std::string_view text_;
  const Lexicon* lexicon_;
  std::vector<Token> tokens_;
  std::vector<std::string> folded_;
};

}  // namespace manucheck

#endif  // MANUCHECK_GRAMMAR_H_
