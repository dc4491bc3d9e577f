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

#include "manucheck/text.h"

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>
#include <unicode/utf8.h>

#include "manucheck/error.h"

namespace manucheck {
namespace {

UChar32 DecodeAt(std::string_view text, std::size_t pos, std::size_t* next) {
  int32_t i = static_cast<int32_t>(pos);
  UChar32 c;
  U8_NEXT(reinterpret_cast<const uint8_t*>(text.data()), i,
          static_cast<int32_t>(text.size()), c);
  *next = static_cast<std::size_t>(i);
  return c;
}

bool IsWordChar(UChar32 c) {
  if (c < 0) return false;
  if (u_hasBinaryProperty(c, UCHAR_ALPHABETIC)) return true;
  switch (u_charType(c)) {
    case U_DECIMAL_DIGIT_NUMBER:
    case U_LETTER_NUMBER:
    case U_OTHER_NUMBER:
    case U_NON_SPACING_MARK:
    case U_COMBINING_SPACING_MARK:
    case U_ENCLOSING_MARK:
      return true;
    default:
      return false;
  }
}

bool IsHyphen(UChar32 c) {
  return c == '-' || c == 0x2010 || c == 0x2011;
}

bool IsApostrophe(UChar32 c) { return c == '\'' || c == 0x2019; }

bool IsAsciiDigit(char c) { return c >= '0' && c <= '9'; }

}  // namespace

std::string NormalizeNfc(std::string_view text) {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* nfc = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status)) {
    throw Error(ErrorCode::kInvalidArgument, "NFC normalizer unavailable");
  }
  icu::UnicodeString source = icu::UnicodeString::fromUTF8(
      icu::StringPiece(text.data(), static_cast<int32_t>(text.size())));
  if (nfc->isNormalized(source, status) && U_SUCCESS(status)) {
    return std::string(text);
  }
  status = U_ZERO_ERROR;
  icu::UnicodeString normalized = nfc->normalize(source, status);
  if (U_FAILURE(status)) {
    throw Error(ErrorCode::kInvalidArgument, "NFC normalization failed");
  }
  std::string out;
  normalized.toUTF8String(out);
  return out;
}

std::string FoldCase(std::string_view text) {
  bool ascii = true;
  for (char c : text) {
    if (static_cast<unsigned char>(c) >= 0x80) {
      ascii = false;
      break;
    }
  }
  if (ascii) {
    std::string out(text);
    for (char& c : out) {
      if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    }
    return out;
  }
  icu::UnicodeString s = icu::UnicodeString::fromUTF8(
      icu::StringPiece(text.data(), static_cast<int32_t>(text.size())));
  s.foldCase();
  std::string out;
  s.toUTF8String(out);
  return out;
}

bool IsSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

std::string_view Trim(std::string_view text) {
  std::size_t b = 0;
  std::size_t e = text.size();
  while (b < e && IsSpace(text[b])) ++b;
  while (e > b && IsSpace(text[e - 1])) --e;
  return text.substr(b, e - b);
}

std::string CollapseWhitespace(std::string_view text) {
  std::string out;
  bool pending_space = false;
  for (char c : Trim(text)) {
    if (IsSpace(c)) {
      pending_space = true;
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    out.push_back(c);
  }
  return out;
}

std::vector<Token> Tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (IsSpace(text[pos])) {
      ++pos;
      continue;
    }
    std::size_t next = 0;
    UChar32 c = DecodeAt(text, pos, &next);
    if (!IsWordChar(c)) {
      tokens.push_back(Token{std::string(text.substr(pos, next - pos)),
                             Span{pos, next}, TokenKind::kPunct});
      pos = next;
      continue;
    }
    std::size_t start = pos;
    std::size_t end = next;
    char last = text[pos];
    while (end < text.size()) {
      std::size_t after = 0;
      UChar32 d = DecodeAt(text, end, &after);
      if (IsWordChar(d)) {
        last = text[end];
        end = after;
        continue;
      }
      // Joiners must sit between two word characters.
      if (after >= text.size()) break;
      std::size_t after2 = 0;
      UChar32 e = DecodeAt(text, after, &after2);
      if (!IsWordChar(e)) break;
      bool join = IsHyphen(d) || IsApostrophe(d) ||
                  ((d == '.' || d == ',') && IsAsciiDigit(last) &&
                   IsAsciiDigit(text[after]));
      if (!join) break;
      last = text[after];
      end = after2;
    }
    tokens.push_back(Token{std::string(text.substr(start, end - start)),
                           Span{start, end}, TokenKind::kWord});
    pos = end;
  }
  return tokens;
}

std::vector<std::string> MatchKeys(std::string_view word) {
  std::string folded = FoldCase(word);
  std::vector<std::string> keys;
  std::string current;
  // 0: none, 1: ascii digit run, 2: other
  int current_class = 0;
  auto flush = [&] {
    if (!current.empty()) keys.push_back(current);
    current.clear();
    current_class = 0;
  };
  std::size_t pos = 0;
  while (pos < folded.size()) {
    std::size_t next = 0;
    UChar32 c = DecodeAt(folded, pos, &next);
    if (IsHyphen(c) || IsApostrophe(c)) {
      flush();
      pos = next;
      continue;
    }
    int cls = (c >= '0' && c <= '9') ? 1 : 2;
    bool numeric_joiner = (c == '.' || c == ',') && current_class == 1;
    if (numeric_joiner) {
      current.append(folded, pos, next - pos);
      pos = next;
      continue;
    }
    if (current_class != 0 && cls != current_class) flush();
    current.append(folded, pos, next - pos);
    current_class = cls;
    pos = next;
  }
  flush();
  return keys;
}

bool IsNumberKey(std::string_view key) {
  if (key.empty() || !IsAsciiDigit(key.front()) || !IsAsciiDigit(key.back())) {
    return false;
  }
  for (char c : key) {
    if (!IsAsciiDigit(c) && c != '.' && c != ',') return false;
  }
  return true;
}

std::string Lemma(std::string_view key) {
  std::string w(key);
  auto ends_with = [&](std::string_view suffix) {
    return w.size() > suffix.size() &&
           std::string_view(w).substr(w.size() - suffix.size()) == suffix;
  };
  if (w.size() <= 3 || IsNumberKey(w)) return w;
  if (ends_with("ies") && w.size() > 4) return w.substr(0, w.size() - 3) + "y";
  if (ends_with("sses")) return w.substr(0, w.size() - 2);
  if (ends_with("ches") || ends_with("shes") || ends_with("xes")) {
    return w.substr(0, w.size() - 2);
  }
  if (ends_with("ss") || ends_with("us") || ends_with("is")) return w;
  if (ends_with("s")) return w.substr(0, w.size() - 1);
  return w;
}

std::vector<KeyToken> KeyTokens(const std::vector<Token>& tokens) {
  std::vector<KeyToken> out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const Token& t = tokens[i];
    if (!t.is_word()) {
      if (t.text == "%" || t.text == "\xC2\xB0") {
        out.push_back(KeyToken{t.text, t.text, t.span, i});
      }
      continue;
    }
    for (std::string& key : MatchKeys(t.text)) {
      std::string lemma = Lemma(key);
      out.push_back(KeyToken{std::move(key), std::move(lemma), t.span, i});
    }
  }
  return out;
}

std::vector<KeyToken> KeyTokens(std::string_view text) {
  return KeyTokens(Tokenize(text));
}

}  // namespace manucheck
