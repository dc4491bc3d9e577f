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

#ifndef MANUCHECK_ASSETS_H_
#define MANUCHECK_ASSETS_H_

#include <string_view>

// Data files under assets/, compiled into the library.
namespace manucheck::assets {

std::string_view IuSchemaJson();
std::string_view LexiconJson();
std::string_view IntegrityPromptJson();
std::string_view LinguisticPromptJson();

}  // namespace manucheck::assets

#endif  // MANUCHECK_ASSETS_H_
