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

#include "manucheck/lexicon.h"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "manucheck/assets.h"
#include "manucheck/error.h"
#include "manucheck/text.h"

namespace manucheck {
namespace {

using nlohmann::json;

const json& Required(const json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end() || !it->is_array() || it->empty()) {
    throw Error(ErrorCode::kLexiconCorrupt,
                std::string("missing or empty list '") + key + "'");
  }
  return *it;
}

std::vector<std::string> Strings(const json& list) {
  std::vector<std::string> out;
  for (const auto& item : list) {
    if (!item.is_string()) {
      throw Error(ErrorCode::kLexiconCorrupt, "non-string lexicon entry");
    }
    out.push_back(FoldCase(item.get<std::string>()));
  }
  return out;
}

Lexicon::WordSet Set(const json& list) {
  auto words = Strings(list);
  return Lexicon::WordSet(words.begin(), words.end());
}

bool Has(const Lexicon::WordSet& set, std::string_view w) {
  return set.count(std::string(w)) > 0;
}

}  // namespace

bool Lexicon::IsStopword(std::string_view w) const { return Has(stopwords, w); }
bool Lexicon::IsPreposition(std::string_view w) const {
  return Has(prepositions, w);
}
bool Lexicon::IsDeterminer(std::string_view w) const {
  return Has(determiners, w);
}
bool Lexicon::IsAuxiliary(std::string_view w) const {
  return Has(auxiliaries, w);
}
bool Lexicon::IsUnit(std::string_view w) const { return Has(units, w); }
bool Lexicon::IsHedge(std::string_view w) const { return Has(hedges, w); }

Lexicon Lexicon::FromJson(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kLexiconCorrupt, e.what());
  }
  Lexicon lex;
  lex.version = doc.value("version", "");
  if (lex.version.empty()) {
    throw Error(ErrorCode::kLexiconCorrupt, "lexicon has no version");
  }
  lex.abbreviations = Strings(Required(doc, "abbreviations"));
  lex.finding_verbs = Set(Required(doc, "finding_verbs"));
  lex.interpretive_verbs = Set(Required(doc, "interpretive_verbs"));
  lex.verbs = Set(Required(doc, "verbs"));
  lex.auxiliaries = Set(Required(doc, "auxiliaries"));
  const json& expletive = doc.at("expletive");
  lex.expletive_copulas = Strings(Required(expletive, "copulas"));
  lex.expletive_complementizers =
      Set(Required(expletive, "complementizers"));
  lex.expletive_max_gap = expletive.value("max_gap", 4);
  const json& pronouns = doc.at("pronouns");
  lex.personal_pronouns = Set(Required(pronouns, "personal"));
  lex.demonstratives = Set(Required(pronouns, "demonstrative"));
  lex.subject_pronouns = Set(Required(doc, "subject_pronouns"));
  lex.determiners = Set(Required(doc, "determiners"));
  lex.prepositions = Set(Required(doc, "prepositions"));
  lex.conjunctions = Set(Required(doc, "conjunctions"));
  lex.hedges = Set(Required(doc, "hedges"));
  lex.stopwords = Set(Required(doc, "stopwords"));
  lex.units = Set(Required(doc, "units"));
  return lex;
}

Lexicon Lexicon::FromFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoFailure, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return FromJson(buf.str());
}

const Lexicon& Lexicon::Default() {
  static const Lexicon lexicon = FromJson(assets::LexiconJson());
  return lexicon;
}

}  // namespace manucheck
