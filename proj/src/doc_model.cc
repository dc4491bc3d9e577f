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

#include "manucheck/doc_model.h"

#include <algorithm>
#include <cctype>

#include "manucheck/error.h"

namespace manucheck {
namespace {

struct Line {
  std::size_t begin = 0;  // first byte
  std::size_t end = 0;    // before the newline
  std::size_t next = 0;   // first byte of the following line
};

std::vector<Line> SplitLines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) {
      lines.push_back(Line{pos, text.size(), text.size()});
      break;
    }
    std::size_t end = nl;
    if (end > pos && text[end - 1] == '\r') --end;
    lines.push_back(Line{pos, end, nl + 1});
    pos = nl + 1;
  }
  return lines;
}

bool IsBlank(std::string_view line) { return Trim(line).empty(); }

// "# Heading ##" -> "Heading"; nullopt when the line is not an ATX heading.
std::optional<std::string> AtxHeading(std::string_view line) {
  std::size_t i = 0;
  while (i < line.size() && i < 3 && line[i] == ' ') ++i;
  std::size_t hashes = 0;
  while (i < line.size() && line[i] == '#') {
    ++hashes;
    ++i;
  }
  if (hashes == 0 || hashes > 6) return std::nullopt;
  if (i < line.size() && line[i] != ' ' && line[i] != '\t') return std::nullopt;
  std::string_view rest = Trim(line.substr(i));
  while (!rest.empty() && rest.back() == '#') rest.remove_suffix(1);
  rest = Trim(rest);
  if (rest.empty()) return std::nullopt;
  return std::string(rest);
}

// Length of a leading section number such as "2.", "2.1.", "3 " or "IV.".
std::size_t NumberingPrefix(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
    while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) ||
                            s[i] == '.')) {
      ++i;
    }
  } else {
    while (i < s.size() && std::string_view("IVXLC").find(s[i]) !=
                               std::string_view::npos) {
      ++i;
    }
    if (i == 0 || i >= s.size() || s[i] != '.') return 0;
    ++i;
  }
  if (i >= s.size() || (s[i] != ' ' && s[i] != '\t')) return 0;
  while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
  return i;
}

std::string StripLabel(std::string_view heading) {
  std::string_view s = Trim(heading);
  s.remove_prefix(NumberingPrefix(s));
  while (!s.empty() && (s.back() == ':' || s.back() == '.')) s.remove_suffix(1);
  return CollapseWhitespace(s);
}

bool LooksLikePlainHeading(std::string_view line) {
  std::string_view s = Trim(line);
  if (s.empty() || s.size() > 120) return false;
  char first = s.front();
  bool upper = first >= 'A' && first <= 'Z';
  bool digit = first >= '0' && first <= '9';
  if (!upper && !digit) return false;
  if (digit) {
    std::size_t n = NumberingPrefix(s);
    if (n == 0 || n >= s.size()) return false;
    char c = s[n];
    if (!(c >= 'A' && c <= 'Z')) return false;
  }
  char last = s.back();
  if (std::string_view(".,;:?!").find(last) != std::string_view::npos) {
    return false;
  }
  if (s.find('\t') != std::string_view::npos ||
      s.find('|') != std::string_view::npos) {
    return false;
  }
  std::size_t words = 1;
  for (char c : s) {
    if (c == ' ') ++words;
  }
  return words <= 12;
}

struct HeadingLine {
  Line line;
  std::string heading;
};

bool IsAbbreviationAt(std::string_view body, std::size_t dot,
                      const Lexicon& lexicon) {
  std::size_t ws = dot;
  while (ws > 0 && !IsSpace(body[ws - 1]) && body[ws - 1] != '(' &&
         body[ws - 1] != '[') {
    --ws;
  }
  std::string_view word = body.substr(ws, dot + 1 - ws);
  // Runs of initials ("J. R. Smith"). A lone capital letter ends a sentence.
  auto initial = [](std::string_view w) {
    return w.size() == 2 && w[0] >= 'A' && w[0] <= 'Z' && w[1] == '.';
  };
  if (initial(word)) {
    std::string_view after = body.substr(dot + 1);
    std::size_t k = 0;
    while (k < after.size() && IsSpace(after[k])) ++k;
    if (k > 0 && initial(after.substr(k, 2)) &&
        (k + 2 == after.size() || IsSpace(after[k + 2]))) {
      return true;
    }
    std::size_t b = ws;
    while (b > 0 && IsSpace(body[b - 1])) --b;
    if (b < ws && b >= 2 && initial(body.substr(b - 2, 2)) &&
        (b == 2 || IsSpace(body[b - 3]))) {
      return true;
    }
  }
  std::string folded_word = FoldCase(word);
  for (const std::string& abbr : lexicon.abbreviations) {
    if (abbr.find(' ') == std::string::npos) {
      if (folded_word == abbr) return true;
      continue;
    }
    if (abbr.size() > dot + 1) continue;
    std::size_t from = dot + 1 - abbr.size();
    if (FoldCase(body.substr(from, abbr.size())) != abbr) continue;
    if (from == 0 || IsSpace(body[from - 1]) || body[from - 1] == '(') {
      return true;
    }
  }
  return false;
}

// Bytes of a closing quote or bracket at `pos`, 0 if none.
std::size_t CloserLength(std::string_view s, std::size_t pos) {
  char c = s[pos];
  if (c == '"' || c == '\'' || c == ')' || c == ']') return 1;
  if (s.substr(pos, 3) == "\xE2\x80\x9D" || s.substr(pos, 3) == "\xE2\x80\x99") {
    return 3;
  }
  return 0;
}

}  // namespace

std::string_view SectionKindName(SectionKind kind) {
  switch (kind) {
    case SectionKind::kAbstract: return "Abstract";
    case SectionKind::kIntroduction: return "Introduction";
    case SectionKind::kMethods: return "Methods";
    case SectionKind::kResults: return "Results";
    case SectionKind::kDiscussion: return "Discussion";
    case SectionKind::kConclusions: return "Conclusions";
    case SectionKind::kOther: return "Other";
  }
  return "Other";
}

std::optional<SectionKind> ParseSectionKind(std::string_view name) {
  std::string folded = FoldCase(Trim(name));
  for (SectionKind k :
       {SectionKind::kAbstract, SectionKind::kIntroduction,
        SectionKind::kMethods, SectionKind::kResults, SectionKind::kDiscussion,
        SectionKind::kConclusions, SectionKind::kOther}) {
    if (FoldCase(SectionKindName(k)) == folded) return k;
  }
  if (folded == "conclusion") return SectionKind::kConclusions;
  return std::nullopt;
}

bool IsImradKind(SectionKind kind) {
  return kind == SectionKind::kIntroduction || kind == SectionKind::kMethods ||
         kind == SectionKind::kResults || kind == SectionKind::kDiscussion;
}

bool IsSummaryKind(SectionKind kind) {
  return kind == SectionKind::kAbstract || kind == SectionKind::kConclusions;
}

const std::vector<SectionKind>& ImradKinds() {
  static const std::vector<SectionKind> kinds = {
      SectionKind::kIntroduction, SectionKind::kMethods, SectionKind::kResults,
      SectionKind::kDiscussion};
  return kinds;
}

std::optional<InputFormat> ParseInputFormat(std::string_view name) {
  std::string folded = FoldCase(name);
  if (folded == "plain" || folded == "text" || folded == "txt") {
    return InputFormat::kPlain;
  }
  if (folded == "markdown" || folded == "md") return InputFormat::kMarkdown;
  return std::nullopt;
}

InputFormat GuessInputFormat(std::string_view text) {
  for (const Line& line : SplitLines(text)) {
    if (AtxHeading(text.substr(line.begin, line.end - line.begin))) {
      return InputFormat::kMarkdown;
    }
  }
  return InputFormat::kPlain;
}

const HeadingAliases& HeadingAliases::Default() {
  static const HeadingAliases aliases = [] {
    HeadingAliases a;
    for (const char* s : {"abstract", "summary abstract"}) {
      a.Add(s, SectionKind::kAbstract);
    }
    for (const char* s : {"introduction", "background", "introduction and background"}) {
      a.Add(s, SectionKind::kIntroduction);
    }
    for (const char* s :
         {"methods", "method", "methodology", "materials and methods",
          "methods and materials", "experimental", "experimental section",
          "experimental procedures", "experimental methods",
          "experimental details", "materials", "experiments"}) {
      a.Add(s, SectionKind::kMethods);
    }
    for (const char* s : {"results", "findings", "results and discussion",
                          "results and discussions", "experimental results"}) {
      a.Add(s, SectionKind::kResults);
    }
    for (const char* s : {"discussion", "general discussion"}) {
      a.Add(s, SectionKind::kDiscussion);
    }
    for (const char* s :
         {"conclusion", "conclusions", "concluding remarks",
          "summary and conclusions", "conclusions and outlook",
          "conclusion and outlook", "conclusions and perspectives"}) {
      a.Add(s, SectionKind::kConclusions);
    }
    return a;
  }();
  return aliases;
}

void HeadingAliases::Add(std::string_view alias, SectionKind kind) {
  table_[Normalize(alias)] = kind;
}

std::optional<SectionKind> HeadingAliases::Lookup(
    std::string_view heading) const {
  auto it = table_.find(Normalize(heading));
  if (it == table_.end()) return std::nullopt;
  return it->second;
}

std::string HeadingAliases::Normalize(std::string_view heading) {
  std::string label = StripLabel(heading);
  std::string out;
  for (std::size_t i = 0; i < label.size(); ++i) {
    if (label[i] == '&') {
      out += "and";
    } else {
      out.push_back(label[i]);
    }
  }
  return FoldCase(CollapseWhitespace(out));
}

std::string Section::DisplayName() const {
  if (kind == SectionKind::kOther) return label;
  return std::string(SectionKindName(kind));
}

bool Manuscript::HasImradContent() const {
  return std::any_of(sections.begin(), sections.end(), [](const Section& s) {
    return IsImradKind(s.kind);
  });
}

Manuscript ParseManuscript(std::string_view input, const ParseOptions& options) {
  if (Trim(input).empty()) {
    throw Error(ErrorCode::kInvalidArgument, "manuscript text is empty");
  }
  const HeadingAliases& aliases =
      options.aliases ? *options.aliases : HeadingAliases::Default();

  Manuscript m;
  m.source_id = options.source_id;
  m.raw_text = NormalizeNfc(input);
  std::string_view text = m.raw_text;

  std::vector<Line> lines = SplitLines(text);
  std::vector<HeadingLine> headings;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::string_view line =
        text.substr(lines[i].begin, lines[i].end - lines[i].begin);
    if (auto atx = AtxHeading(line)) {
      headings.push_back(HeadingLine{lines[i], *atx});
      continue;
    }
    if (options.format != InputFormat::kPlain) continue;
    std::string_view trimmed = Trim(line);
    if (trimmed.empty()) continue;
    bool alias_match = aliases.Lookup(trimmed).has_value() &&
                       LooksLikePlainHeading(trimmed);
    bool blank_before =
        i == 0 || IsBlank(text.substr(lines[i - 1].begin,
                                      lines[i - 1].end - lines[i - 1].begin));
    bool blank_after =
        i + 1 == lines.size() ||
        IsBlank(text.substr(lines[i + 1].begin,
                            lines[i + 1].end - lines[i + 1].begin));
    // A lone line at the very start and end of the text is a paragraph.
    bool standalone = blank_before && blank_after && lines.size() > 1 &&
                      LooksLikePlainHeading(trimmed);
    if (alias_match || standalone) {
      headings.push_back(HeadingLine{lines[i], std::string(trimmed)});
    }
  }
  if (headings.empty()) {
    throw Error(ErrorCode::kNoHeadingsFound,
                "no section heading detected in '" + options.source_id + "'");
  }

  for (std::size_t h = 0; h < headings.size(); ++h) {
    const Line& line = headings[h].line;
    std::size_t region_begin = line.next;
    std::size_t region_end =
        h + 1 < headings.size() ? headings[h + 1].line.begin : text.size();
    if (region_begin > region_end) region_begin = region_end;
    std::string_view region = text.substr(region_begin, region_end - region_begin);
    std::string_view body = Trim(region);

    Section s;
    s.heading = headings[h].heading;
    s.label = StripLabel(s.heading);
    s.kind = aliases.Lookup(s.heading).value_or(SectionKind::kOther);
    s.body = std::string(body);
    if (body.empty()) {
      s.body_span = Span{line.end, line.end};
    } else {
      std::size_t offset = region_begin + static_cast<std::size_t>(
                                              body.data() - region.data());
      s.body_span = Span{offset, offset + body.size()};
    }
    s.span = Span{line.begin, s.body_span.end};
    m.sections.push_back(std::move(s));
  }
  return m;
}

const Section& LocateSection(const Manuscript& m, SectionKind kind) {
  for (const Section& s : m.sections) {
    if (s.kind == kind) return s;
  }
  throw Error(ErrorCode::kSectionNotFound,
              "manuscript has no " + std::string(SectionKindName(kind)) +
                  " section");
}

std::vector<Sentence> SegmentSentences(const Section& section) {
  return SegmentSentences(section.body, Lexicon::Default());
}

std::vector<Sentence> SegmentSentences(std::string_view body,
                                       const Lexicon& lexicon) {
  std::vector<Sentence> out;
  constexpr std::size_t kNone = std::string_view::npos;
  std::size_t start = kNone;
  int depth = 0;

  auto emit = [&](std::size_t end) {
    while (end > start && IsSpace(body[end - 1])) --end;
    if (end > start) {
      out.push_back(Sentence{out.size(), std::string(body.substr(start, end - start)),
                             Span{start, end}});
    }
    start = kNone;
    depth = 0;
  };

  for (std::size_t i = 0; i < body.size(); ++i) {
    char c = body[i];
    if (start == kNone) {
      if (!IsSpace(c)) {
        start = i;
      } else {
        continue;
      }
    }
    if (c == '\n') {
      std::size_t j = i + 1;
      while (j < body.size() && (body[j] == ' ' || body[j] == '\t' || body[j] == '\r')) {
        ++j;
      }
      if (j < body.size() && body[j] == '\n') emit(i);
      continue;
    }
    if (c == '(' || c == '[') {
      ++depth;
      continue;
    }
    if (c == ')' || c == ']') {
      depth = std::max(0, depth - 1);
      continue;
    }
    if ((c != '.' && c != '?' && c != '!') || depth > 0) continue;

    std::size_t j = i + 1;
    while (j < body.size() && (body[j] == '.' || body[j] == '?' || body[j] == '!')) {
      ++j;
    }
    while (j < body.size()) {
      std::size_t n = CloserLength(body, j);
      if (n == 0) break;
      j += n;
    }
    if (j >= body.size() || !IsSpace(body[j])) continue;
    std::size_t k = j;
    while (k < body.size() && IsSpace(body[k])) ++k;
    if (k >= body.size()) continue;
    char next = body[k];
    if ((next >= 'a' && next <= 'z') ||
        std::string_view(",;:)").find(next) != std::string_view::npos) {
      continue;
    }
    if (c == '.' && IsAbbreviationAt(body, i, lexicon)) continue;
    emit(j);
    i = j - 1;
  }
  if (start != kNone) emit(body.size());
  return out;
}

std::string SerializeManuscript(const Manuscript& m) {
  std::string out;
  for (const Section& s : m.sections) {
    if (!out.empty()) out += "\n";
    out += "## " + s.heading + "\n\n";
    if (!s.body.empty()) out += s.body + "\n";
  }
  return out;
}

Manuscript ManuscriptFromSection(std::string_view body, SectionKind kind,
                                 std::string source_id) {
  std::string text = "## " + std::string(SectionKindName(kind)) + "\n\n" +
                     std::string(Trim(body)) + "\n";
  ParseOptions options;
  options.format = InputFormat::kMarkdown;
  options.source_id = std::move(source_id);
  return ParseManuscript(text, options);
}

}  // namespace manucheck
