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

#ifndef MANUCHECK_TEXT_H_
#define MANUCHECK_TEXT_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace manucheck {

// Half-open byte interval [begin, end) into a UTF-8 string.
struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t size() const { return end - begin; }
  bool empty() const { return begin == end; }
  bool Contains(const Span& other) const {
    return begin <= other.begin && other.end <= end;
  }
  bool Overlaps(const Span& other) const {
    return begin < other.end && other.begin < end;
  }
  Span Shifted(std::size_t offset) const {
    return Span{begin + offset, end + offset};
  }
  friend bool operator==(const Span&, const Span&) = default;
};

inline std::string_view Slice(std::string_view text, const Span& span) {
  return text.substr(span.begin, span.size());
}

// Unicode normalization form C. Superscript and subscript digits are left
// untouched (NFC never applies compatibility mappings).
std::string NormalizeNfc(std::string_view text);

// Full Unicode case folding.
std::string FoldCase(std::string_view text);

std::string_view Trim(std::string_view text);
std::string CollapseWhitespace(std::string_view text);
bool IsSpace(char c);

enum class TokenKind { kWord, kPunct };

struct Token {
  std::string text;
  Span span;
  TokenKind kind = TokenKind::kWord;

  bool is_word() const { return kind == TokenKind::kWord; }
};

// Splits text into word and punctuation tokens. A word is a run of letters,
// digits (including superscript/subscript digits) and combining marks;
// hyphens and apostrophes join word characters, and '.' or ',' join digits,
// so "40-fold", "GC-MS", "H₂¹⁷O" and "0.09" are single tokens.
std::vector<Token> Tokenize(std::string_view text);

// Case-folded matching fragments of one word token. Hyphens split
// fragments, and ASCII digit runs are split from adjacent letters:
// "40-fold" -> {"40", "fold"}, "90mL" -> {"90", "ml"}, "H₂¹⁷O" -> {"h₂¹⁷o"}.
std::vector<std::string> MatchKeys(std::string_view word);

bool IsNumberKey(std::string_view key);

// Crude English lemma for comparing nouns and verbs across inflections.
std::string Lemma(std::string_view key);

// A matching fragment together with where it came from.
struct KeyToken {
  std::string key;
  std::string lemma;
  Span span;               // span of the originating token
  std::size_t token = 0;   // index of the originating token
};

// Keys for every word token of `text`, plus "%" and "°" punctuation which
// take part in quantities. Spans are relative to `text`.
std::vector<KeyToken> KeyTokens(std::string_view text);
std::vector<KeyToken> KeyTokens(const std::vector<Token>& tokens);

}  // namespace manucheck

#endif  // MANUCHECK_TEXT_H_
