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

#include <gtest/gtest.h>

#include "json.hpp"
#include <string>
#include <vector>

#include "manucheck/error.h"
#include "manucheck/text.h"
#include "test_util.h"

namespace manucheck {
namespace {

using testing::GroundTruth;
using testing::ReadFixture;

void ExpectSentenceCoverage(const Section& s) {
  std::vector<Sentence> sentences = SegmentSentences(s);
  std::size_t pos = 0;
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    const Sentence& x = sentences[i];
    EXPECT_EQ(x.index, i);
    ASSERT_LE(pos, x.span.begin);
    for (std::size_t c = pos; c < x.span.begin; ++c) {
      EXPECT_TRUE(IsSpace(s.body[c])) << "gap char in " << s.label;
    }
    EXPECT_EQ(Slice(s.body, x.span), x.text);
    pos = x.span.end;
  }
  for (std::size_t c = pos; c < s.body.size(); ++c) {
    EXPECT_TRUE(IsSpace(s.body[c])) << "tail char in " << s.label;
  }
}

void ExpectRoundTrip(const Manuscript& m) {
  std::size_t prev_end = 0;
  for (const Section& s : m.sections) {
    EXPECT_LE(prev_end, s.span.begin);
    EXPECT_LE(s.span.end, m.raw_text.size());
    EXPECT_TRUE(s.span.Contains(s.body_span));
    EXPECT_EQ(Slice(m.raw_text, s.body_span), s.body);
    // Everything in the span before the body is the heading line.
    std::string_view head = Slice(m.raw_text, Span{s.span.begin, s.body_span.begin});
    EXPECT_NE(head.find(s.heading), std::string_view::npos);
    prev_end = s.span.end;
  }
}

TEST(ParseManuscript, MapsHeadingsThroughAliases) {
  Manuscript m = ParseManuscript(
      "# Abstract\n\nA.\n\n# Methods\n\nB.\n\n# Conclusions\n\nC.\n", {});
  ASSERT_EQ(m.sections.size(), 3u);
  EXPECT_EQ(m.sections[0].kind, SectionKind::kAbstract);
  EXPECT_EQ(m.sections[1].kind, SectionKind::kMethods);
  EXPECT_EQ(m.sections[2].kind, SectionKind::kConclusions);
}

TEST(ParseManuscript, AliasTableFixture) {
  const std::vector<std::pair<std::string, SectionKind>> table = {
      {"Concluding Remarks", SectionKind::kConclusions},
      {"CONCLUSION", SectionKind::kConclusions},
      {"Experimental", SectionKind::kMethods},
      {"Materials and Methods", SectionKind::kMethods},
      {"2. Results", SectionKind::kResults},
      {"Discussion:", SectionKind::kDiscussion},
      {"Background", SectionKind::kIntroduction},
      {"Acknowledgments", SectionKind::kOther},
  };
  for (const auto& [heading, kind] : table) {
    Manuscript m = ParseManuscript("## " + heading + "\n\nBody text.\n", {});
    ASSERT_EQ(m.sections.size(), 1u) << heading;
    EXPECT_EQ(m.sections[0].kind, kind) << heading;
  }
}

TEST(ParseManuscript, UnmatchedHeadingKeepsLabel) {
  Manuscript m = ParseManuscript("## Safety Statement\n\nNone.\n", {});
  EXPECT_EQ(m.sections[0].kind, SectionKind::kOther);
  EXPECT_EQ(m.sections[0].label, "Safety Statement");
}

TEST(ParseManuscript, CustomAliasExtendsTable) {
  HeadingAliases aliases = HeadingAliases::Default();
  aliases.Add("Outlook and Summary", SectionKind::kConclusions);
  ParseOptions opts;
  opts.aliases = &aliases;
  Manuscript m = ParseManuscript("## Outlook and Summary\n\nDone.\n", opts);
  EXPECT_EQ(m.sections[0].kind, SectionKind::kConclusions);
}

TEST(ParseManuscript, NoStructureRaises) {
  try {
    ParseManuscript("just one long line of prose without any heading.", {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNoHeadingsFound);
  }
}

TEST(ParseManuscript, PlainHeadings) {
  ParseOptions opts;
  opts.format = InputFormat::kPlain;
  Manuscript m = ParseManuscript("Abstract\nShort.\n\nConclusions\n\nDone here.\n", opts);
  ASSERT_EQ(m.sections.size(), 2u);
  EXPECT_EQ(m.sections[1].kind, SectionKind::kConclusions);
  EXPECT_EQ(m.sections[1].body, "Done here.");
}

TEST(LocateSection, FindsConclusions) {
  Manuscript m = GroundTruth();
  const Section& s = LocateSection(m, SectionKind::kConclusions);
  EXPECT_EQ(s.label, "Conclusions");
}

TEST(LocateSection, MissingRaises) {
  Manuscript m = ParseManuscript("## Methods\n\nX.\n", {});
  try {
    LocateSection(m, SectionKind::kAbstract);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSectionNotFound);
  }
}

TEST(LocateSection, FirstOfDuplicatesWins) {
  Manuscript m = ParseManuscript(
      "## Conclusions\n\nFirst.\n\n## Methods\n\nM.\n\n## Conclusions\n\nSecond.\n", {});
  EXPECT_EQ(LocateSection(m, SectionKind::kConclusions).body, "First.");
}

TEST(SegmentSentences, EmptyBody) {
  EXPECT_TRUE(SegmentSentences("", Lexicon::Default()).empty());
}

TEST(SegmentSentences, AbbreviationDoesNotSplit) {
  auto s = SegmentSentences("Fig. 2 shows X. It works.", Lexicon::Default());
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s[0].text, "Fig. 2 shows X.");
  EXPECT_EQ(s[1].text, "It works.");
}

TEST(SegmentSentences, ChemicalNotationStaysIntact) {
  auto s = SegmentSentences(
      "About 90 mL of H₂¹⁷O was obtained. The pH was 7.4 (cf. Ref. 3).", Lexicon::Default());
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s[1].text, "The pH was 7.4 (cf. Ref. 3).");
}

TEST(SegmentSentences, ThirdConclusionsSentence) {
  Manuscript m = GroundTruth();
  auto s = SegmentSentences(LocateSection(m, SectionKind::kConclusions));
  ASSERT_EQ(s.size(), 6u);
  EXPECT_EQ(s[2].text,
            "From approximately 500 mL of 40-fold enriched water, about 90 mL of H₂¹⁷O was "
            "obtained.");
}

TEST(Properties, GroundTruthRoundTripAndCoverage) {
  Manuscript m = GroundTruth();
  ExpectRoundTrip(m);
  for (const Section& s : m.sections) ExpectSentenceCoverage(s);
}

TEST(Properties, SerializeIsIdempotent) {
  Manuscript a = GroundTruth();
  Manuscript b = ParseManuscript(SerializeManuscript(a), {});
  Manuscript c = ParseManuscript(SerializeManuscript(b), {});
  ASSERT_EQ(b.sections.size(), c.sections.size());
  for (std::size_t i = 0; i < b.sections.size(); ++i) {
    EXPECT_EQ(b.sections[i].kind, c.sections[i].kind);
    EXPECT_EQ(b.sections[i].span, c.sections[i].span);
    EXPECT_EQ(a.sections[i].body, b.sections[i].body);
  }
}

// Every corpus document is built from known sentences, recorded in
// expected.json by the generator.
TEST(Properties, SyntheticCorpus) {
  auto manifest = nlohmann::json::parse(ReadFixture("corpus/expected.json"));
  ASSERT_EQ(manifest.size(), 20u);
  for (const auto& doc : manifest) {
    const std::string file = doc["file"];
    ParseOptions opts;
    opts.source_id = file;
    opts.format = doc["format"] == "plain" ? InputFormat::kPlain : InputFormat::kMarkdown;
    Manuscript m = ParseManuscript(ReadFixture("corpus/" + file), opts);
    ExpectRoundTrip(m);
    ASSERT_EQ(m.sections.size(), doc["sections"].size()) << file;
    for (std::size_t i = 0; i < m.sections.size(); ++i) {
      const auto& want = doc["sections"][i];
      const Section& got = m.sections[i];
      EXPECT_EQ(FoldCase(SectionKindName(got.kind)), want["kind"].get<std::string>()) << file;
      EXPECT_EQ(got.label, want["label"].get<std::string>()) << file;
      ExpectSentenceCoverage(got);
      std::vector<std::string> texts;
      for (const Sentence& s : SegmentSentences(got)) texts.push_back(s.text);
      EXPECT_EQ(texts, want["sentences"].get<std::vector<std::string>>()) << file;
    }
    Manuscript again = ParseManuscript(SerializeManuscript(m), opts);
    ASSERT_EQ(again.sections.size(), m.sections.size());
    for (std::size_t i = 0; i < m.sections.size(); ++i) {
      EXPECT_EQ(again.sections[i].kind, m.sections[i].kind);
      EXPECT_EQ(again.sections[i].body, m.sections[i].body);
    }
  }
}

}  // namespace
}  // namespace manucheck
