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


#include "manucheck/iu_schema.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "json.hpp"
#include "manucheck/error.h"
#include "manucheck/integrity.h"
#include "test_util.h"

namespace manucheck {
namespace {

using K = SectionKind;

struct Expected {
  const char* name;
  std::vector<K> primary;
};

// Reference category names and primary locations, typed in by hand.
const std::vector<Expected>& ReferenceTable() {
  static const std::vector<Expected> t = {
      {"Background, Aim, and Problem Statement", {K::kIntroduction}},
      {"Statement of Core Methodology", {K::kMethods}},
      {"Methodological Highlight (Pivotal Aspect)", {K::kMethods, K::kResults}},
      {"Key Finding / Main Result", {K::kResults}},
      {"Subsidiary Finding / Secondary Result", {K::kResults}},
      {"Interpretation of Finding(s)", {K::kDiscussion}},
      {"Answer to Research Question / Resolution of Hypothesis", {K::kDiscussion}},
      {"Comparison with Existing Literature / Contextualization",
       {K::kDiscussion, K::kIntroduction}},
      {"Statement of Broader Significance / Impact", {K::kDiscussion}},
      {"Practical Application / Recommendation", {K::kDiscussion}},
      {"Acknowledgement of Study Limitation(s)", {K::kDiscussion, K::kMethods}},
      {"Suggestion for Future Research / Outlook", {K::kDiscussion}},
      {"Overall Concluding Remark / Take-Home Message", {K::kResults, K::kDiscussion}},
  };
  return t;
}

TEST(IuSchema, MatchesReferenceTable) {
  const IuSchema& schema = LoadSchema();
  ASSERT_EQ(schema.categories().size(), 13u);
  for (int id = 1; id <= 13; ++id) {
    const IUCategory& c = schema.Get(id);
    EXPECT_EQ(c.id, id);
    EXPECT_EQ(c.name, ReferenceTable()[id - 1].name);
    EXPECT_EQ(c.primary_locations, ReferenceTable()[id - 1].primary);
    EXPECT_FALSE(c.scope.empty());
    EXPECT_FALSE(c.verification_notes.empty());
  }
}

TEST(IuSchema, LocationWordingIsVerbatim) {
  const IuSchema& schema = LoadSchema();
  EXPECT_EQ(schema.Get(3).primary_location_text,
            "Methods (for full description); Results (for performance/validation data, if "
            "applicable).");
  EXPECT_EQ(schema.Get(13).primary_location_text,
            "Content derived from Results and Discussion; specific phrasing is unique to "
            "summary sections.");
}

TEST(IuSchema, NamesAreUnique) {
  std::vector<std::string> names;
  for (const IUCategory& c : LoadSchema().categories()) names.push_back(c.name);
  std::sort(names.begin(), names.end());
  EXPECT_EQ(std::adjacent_find(names.begin(), names.end()), names.end());
}

TEST(IuSchema, GetOutOfRange) {
  EXPECT_THROW(LoadSchema().Get(0), Error);
  EXPECT_THROW(LoadSchema().Get(14), Error);
}

TEST(IuSchema, CorruptAssetsRejected) {
  auto code = [](const std::string& text) {
    try {
      IuSchema::FromJson(text);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kInvalidArgument;
  };
  EXPECT_EQ(code("not json"), ErrorCode::kSchemaCorrupt);
  EXPECT_EQ(code(R"({"version":"1","categories":[]})"), ErrorCode::kSchemaCorrupt);
  auto j = nlohmann::json::parse(LoadSchema().ToJson());
  j["categories"].erase(j["categories"].begin() + 4);
  EXPECT_EQ(code(j.dump()), ErrorCode::kSchemaCorrupt);
}

TEST(IuSchema, JsonExportRoundTrips) {
  IuSchema again = IuSchema::FromJson(LoadSchema().ToJson());
  ASSERT_EQ(again.categories().size(), 13u);
  for (int id = 1; id <= 13; ++id) {
    EXPECT_EQ(again.Get(id).name, LoadSchema().Get(id).name);
    EXPECT_EQ(again.Get(id).cues, LoadSchema().Get(id).cues);
  }
}

TEST(CategorySearchTargets, PrimaryFirstThenFixedFallback) {
  const IuSchema& s = LoadSchema();
  EXPECT_EQ(CategorySearchTargets(s.Get(6)),
            (std::vector<K>{K::kDiscussion, K::kResults, K::kMethods, K::kIntroduction}));
  EXPECT_EQ(CategorySearchTargets(s.Get(1)).front(), K::kIntroduction);
  auto t13 = CategorySearchTargets(s.Get(13));
  EXPECT_EQ(t13[0], K::kResults);
  EXPECT_EQ(t13[1], K::kDiscussion);
}

TEST(CategorySearchTargets, CoversEveryImradKindOnce) {
  for (const IUCategory& c : LoadSchema().categories()) {
    std::vector<K> got = CategorySearchTargets(c);
    std::vector<K> sorted = got;
    std::sort(sorted.begin(), sorted.end());
    std::vector<K> want = ImradKinds();
    std::sort(want.begin(), want.end());
    EXPECT_EQ(sorted, want) << c.id;
  }
}

TEST(RenderForPrompt, ListsAllCategories) {
  std::string r = LoadSchema().RenderForPrompt();
  for (const IUCategory& c : LoadSchema().categories()) {
    EXPECT_NE(r.find(c.name), std::string::npos);
  }
}

InformationUnit UnitFor(const std::string& clause) {
  InformationUnit u;
  u.text = clause;
  u.clause = clause;
  return u;
}

TEST(ClassifyIu, GoldenSentences) {
  auto golden = nlohmann::json::parse(testing::ReadFixture("integrity/iu_golden.json"));
  ASSERT_EQ(golden.size(), 13u);
  for (const auto& g : golden) {
    CategoryAssignment a = ClassifyIu(UnitFor(g["sentence"]), LoadSchema());
    EXPECT_EQ(a.category_id, g["category"].get<int>()) << g["sentence"];
    EXPECT_EQ(a.confidence, Confidence::kHigh) << g["sentence"];
  }
}

TEST(ClassifyIu, LowestIdWinsOnTies) {
  CategoryAssignment a =
      ClassifyIu(UnitFor("The procedure gave a high yield, consistent with earlier work."),
                 LoadSchema());
  EXPECT_EQ(a.category_id, 2);
  EXPECT_EQ(a.confidence, Confidence::kMedium);
  EXPECT_NE(a.rationale.find("lowest id"), std::string::npos);
}

TEST(ClassifyIu, NoCueFallsBackToKeyFinding) {
  CategoryAssignment a = ClassifyIu(UnitFor("Water is wet."), LoadSchema());
  EXPECT_EQ(a.category_id, 4);
  EXPECT_EQ(a.confidence, Confidence::kLow);
}

TEST(ClassifyIu, CuesMatchWholeWords) {
  // "aims" must not fire inside "claims", nor "aim" inside "maim".
  CategoryAssignment a = ClassifyIu(UnitFor("The claims were maimed."), LoadSchema());
  EXPECT_NE(a.category_id, 1);
}

}  // namespace
}  // namespace manucheck
