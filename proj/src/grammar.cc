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

#include "manucheck/grammar.h"

namespace manucheck {
namespace {

bool EndsWith(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.substr(s.size() - suffix.size()) == suffix;
}

bool IsCoordinator(std::string_view w) {
  return w == "and" || w == "but" || w == "whereas" || w == "while" ||
         w == "although" || w == "yet";
}

}  // namespace

TaggedSentence::TaggedSentence(std::string_view text, const Lexicon& lexicon)
    : text_(text), lexicon_(&lexicon), tokens_(Tokenize(text)) {
  folded_.reserve(tokens_.size());
  for (const Token& t : tokens_) folded_.push_back(FoldCase(t.text));
}

bool TaggedSentence::IsAdverb(std::size_t i) const {
  if (!is_word(i)) return false;
  const std::string& w = folded_[i];
  return w.size() > 4 && EndsWith(w, "ly") && !lexicon_->IsStopword(w);
}

bool TaggedSentence::IsFunctionWord(std::size_t i) const {
  if (!is_word(i)) return false;
  const std::string& w = folded_[i];
  const Lexicon& lx = *lexicon_;
  return lx.IsStopword(w) || lx.IsDeterminer(w) || lx.IsPreposition(w) ||
         lx.conjunctions.count(w) || lx.IsAuxiliary(w) || lx.IsHedge(w) ||
         lx.subject_pronouns.count(w) || lx.personal_pronouns.count(w);
}

bool TaggedSentence::IsVerbLike(std::size_t i) const {
  if (!is_word(i)) return false;
  const std::string& w = folded_[i];
  if (lexicon_->verbs.count(w)) return true;
  if (w.size() > 3 && EndsWith(w, "ed")) {
    // A participle directly followed by a content word is adjectival
    // ("enriched water"); otherwise it is read as a verb ("was obtained.").
    std::size_t next = i + 1;
    if (next >= tokens_.size() || !is_word(next)) return true;
    const std::string& n = folded_[next];
    bool next_content = !IsFunctionWord(next) && !IsAdverb(next) &&
                        !lexicon_->verbs.count(n);
    return !next_content;
  }
  return false;
}

bool TaggedSentence::IsContent(std::size_t i) const {
  return is_word(i) && !IsFunctionWord(i) && !IsAdverb(i) && !IsVerbLike(i);
}

bool TaggedSentence::IsNumber(std::size_t i) const {
  return is_word(i) && IsNumberKey(folded_[i]);
}

bool TaggedSentence::HasFiniteVerb(TokenRange range) const {
  for (std::size_t i = range.begin; i < range.end; ++i) {
    if (is_word(i) && (lexicon_->IsAuxiliary(folded_[i]) ||
                       lexicon_->verbs.count(folded_[i]))) {
      return true;
    }
  }
  return false;
}

std::vector<TokenRange> TaggedSentence::Clauses() const {
  std::vector<TokenRange> out;
  std::size_t start = 0;
  const std::size_t n = tokens_.size();
  auto push = [&](std::size_t end) {
    if (end > start) out.push_back(TokenRange{start, end});
  };
  for (std::size_t i = 0; i < n; ++i) {
    if (!is_word(i)) {
      if (tokens_[i].text == ";") {
        push(i);
        start = i + 1;
      }
      continue;
    }
    if (!IsCoordinator(folded_[i]) || i == start) continue;
    std::size_t right_end = n;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (tokens_[j].text == ";") {
        right_end = j;
        break;
      }
    }
    bool new_subject = i + 1 < n && is_word(i + 1) &&
                       lexicon_->subject_pronouns.count(folded_[i + 1]);
    bool new_verb = HasFiniteVerb(TokenRange{i + 1, right_end}) &&
                    HasFiniteVerb(TokenRange{start, i});
    if (!new_subject && !new_verb) continue;
    std::size_t end = i;
    if (end > start && tokens_[end - 1].text == ",") --end;
    push(end);
    start = i + 1;
  }
  push(n);
  return out;
}

TokenRange TaggedSentence::ClauseOf(std::size_t token) const {
  for (const TokenRange& r : Clauses()) {
    if (token >= r.begin && token < r.end) return r;
  }
  return TokenRange{0, tokens_.size()};
}

std::vector<TokenRange> TaggedSentence::ContentChunks(TokenRange range) const {
  std::vector<TokenRange> out;
  std::size_t i = range.begin;
  while (i < range.end) {
    if (!IsContent(i)) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < range.end && IsContent(j)) ++j;
    out.push_back(TokenRange{i, j});
    i = j;
  }
  return out;
}

Span TaggedSentence::SpanOf(TokenRange range) const {
  if (range.empty()) return Span{};
  return Span{tokens_[range.begin].span.begin, tokens_[range.end - 1].span.end};
}

std::string TaggedSentence::TextOf(TokenRange range) const {
  return std::string(Slice(text_, SpanOf(range)));
}

}  // namespace manucheck
