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

#include <algorithm>

#include "json.hpp"
#include "manucheck/assets.h"
#include "manucheck/error.h"

namespace manucheck {
namespace {

using nlohmann::ordered_json;

constexpr int kCategoryCount = 13;

std::string RequireString(const ordered_json& obj, const char* key, int id) {
  auto it = obj.find(key);
  if (it == obj.end() || !it->is_string() || it->get<std::string>().empty()) {
    throw Error(ErrorCode::kSchemaCorrupt, "category " + std::to_string(id) +
                                               " lacks '" + key + "'");
  }
  return it->get<std::string>();
}

}  // namespace

std::string_view ConfidenceName(Confidence c) {
  switch (c) {
    case Confidence::kHigh: return "high";
    case Confidence::kMedium: return "medium";
    case Confidence::kLow: return "low";
  }
  return "low";
}

const IUCategory& IuSchema::Get(int id) const {
  if (!Contains(id)) {
    throw Error(ErrorCode::kInvalidArgument,
                "no IU category with id " + std::to_string(id));
  }
  return categories_[static_cast<std::size_t>(id - 1)];
}

IuSchema IuSchema::FromJson(std::string_view json_text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(json_text);
  } catch (const ordered_json::exception& e) {
    throw Error(ErrorCode::kSchemaCorrupt, e.what());
  }
  IuSchema schema;
  schema.version_ = doc.value("version", "");
  auto cats = doc.find("categories");
  if (cats == doc.end() || !cats->is_array()) {
    throw Error(ErrorCode::kSchemaCorrupt, "no categories array");
  }
  if (cats->size() != kCategoryCount) {
    throw Error(ErrorCode::kSchemaCorrupt,
                "expected 13 categories, found " + std::to_string(cats->size()));
  }
  for (const auto& entry : *cats) {
    IUCategory c;
    c.id = entry.value("id", 0);
    if (c.id != static_cast<int>(schema.categories_.size()) + 1) {
      throw Error(ErrorCode::kSchemaCorrupt,
                  "category ids must be contiguous from 1");
    }
    c.name = RequireString(entry, "name", c.id);
    c.scope = RequireString(entry, "scope", c.id);
    c.primary_location_text = RequireString(entry, "primary_location_text", c.id);
    c.verification_notes = RequireString(entry, "verification_notes", c.id);
    for (const auto& loc : entry.value("primary_locations", ordered_json::array())) {
      auto kind = ParseSectionKind(loc.get<std::string>());
      if (!kind || !IsImradKind(*kind)) {
        throw Error(ErrorCode::kSchemaCorrupt,
                    "category " + std::to_string(c.id) +
                        " names a non-IMRaD primary location");
      }
      c.primary_locations.push_back(*kind);
    }
    if (c.primary_locations.empty()) {
      throw Error(ErrorCode::kSchemaCorrupt,
                  "category " + std::to_string(c.id) + " has no primary location");
    }
    for (const auto& cue : entry.value("heuristic_cues", ordered_json::array())) {
      c.cues.push_back(cue.get<std::string>());
    }
    schema.categories_.push_back(std::move(c));
  }
  return schema;
}

std::string IuSchema::RenderForPrompt() const {
  std::string out;
  for (const IUCategory& c : categories_) {
    out += std::to_string(c.id) + ". " + c.name + "\n";
    out += "   - Scope: " + c.scope + "\n";
    out += "   - Primary IMRaD location: " + c.primary_location_text + "\n";
    out += "   - Verification notes: " + c.verification_notes + "\n";
  }
  if (!out.empty()) out.pop_back();
  return out;
}

std::string IuSchema::ToJson() const {
  ordered_json doc;
  doc["version"] = version_;
  doc["categories"] = ordered_json::array();
  for (const IUCategory& c : categories_) {
    ordered_json entry;
    entry["id"] = c.id;
    entry["name"] = c.name;
    entry["scope"] = c.scope;
    entry["primary_location_text"] = c.primary_location_text;
    entry["primary_locations"] = ordered_json::array();
    for (SectionKind k : c.primary_locations) {
      entry["primary_locations"].push_back(std::string(SectionKindName(k)));
    }
    entry["verification_notes"] = c.verification_notes;
    entry["heuristic_cues"] = c.cues;
    doc["categories"].push_back(std::move(entry));
  }
  return doc.dump(2) + "\n";
}

const IuSchema& LoadSchema() {
  static const IuSchema schema = IuSchema::FromJson(assets::IuSchemaJson());
  return schema;
}

std::vector<SectionKind> CategorySearchTargets(const IUCategory& category) {
  static const SectionKind kFallback[] = {
      SectionKind::kResults, SectionKind::kDiscussion, SectionKind::kMethods,
      SectionKind::kIntroduction};
  std::vector<SectionKind> out;
  for (SectionKind k : category.primary_locations) {
    if (std::find(out.begin(), out.end(), k) == out.end()) out.push_back(k);
  }
  for (SectionKind k : kFallback) {
    if (std::find(out.begin(), out.end(), k) == out.end()) out.push_back(k);
  }
  return out;
}

}  // namespace manucheck
