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

#include <gtest/gtest.h>

#include <string>
#include <vector>

namespace manucheck {
namespace {

std::vector<std::string> Keys(std::string_view s) {
  std::vector<std::string> out;
  for (const KeyToken& k : KeyTokens(s)) out.push_back(k.key);
  return out;
}

TEST(Text, NfcComposesDecomposedInput) {
  // e + combining acute
  EXPECT_EQ(NormalizeNfc("caf\x65\xcc\x81"), "caf\xc3\xa9");
  EXPECT_EQ(NormalizeNfc("H₂¹⁷O"), "H₂¹⁷O");
}

TEST(Text, FoldCaseIsCaseInsensitive) {
  EXPECT_EQ(FoldCase("Concluding REMARKS"), "concluding remarks");
  EXPECT_EQ(FoldCase("mL"), "ml");
}

TEST(Text, TrimAndCollapse) {
  EXPECT_EQ(Trim("  a b \n"), "a b");
  EXPECT_EQ(CollapseWhitespace(" a \n\t b  "), "a b");
}

TEST(Text, TokensCarrySpans) {
  std::string s = "About 90 mL of H₂¹⁷O.";
  for (const Token& t : Tokenize(s)) {
    EXPECT_EQ(Slice(s, t.span), t.text);
  }
}

TEST(Text, UnitSplittingMakesGluedAndSpacedQuantitiesEqual) {
  EXPECT_EQ(Keys("90 mL"), Keys("90mL"));
  EXPECT_EQ(Keys("90 mL"), Keys("90 ml"));
  EXPECT_NE(Keys("0.09 L"), Keys("90 mL"));
}

TEST(Text, HyphenatedModifierSplitsIntoKeys) {
  std::vector<std::string> k = Keys("40-fold");
  ASSERT_EQ(k.size(), 2u);
  EXPECT_TRUE(IsNumberKey(k[0]));
  EXPECT_EQ(k[1], "fold");
}

TEST(Text, LemmaStripsPlural) {
  EXPECT_EQ(Lemma("reactions"), "reaction");
  EXPECT_EQ(Lemma("reaction"), "reaction");
}

}  // namespace
}  // namespace manucheck
