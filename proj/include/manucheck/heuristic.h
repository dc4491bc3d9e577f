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

#ifndef MANUCHECK_HEURISTIC_H_
#define MANUCHECK_HEURISTIC_H_

#include <cstddef>

#include "manucheck/doc_model.h"
#include "manucheck/gateway.h"
#include "manucheck/integrity.h"
#include "manucheck/iu_schema.h"
#include "manucheck/lexicon.h"
#include "manucheck/linguistic.h"

namespace manucheck {

// Rule-based integrity workflow. Same contract as RunIntegrityWorkflow.
IntegrityReport HeuristicIntegrity(const Manuscript& m, SectionKind target,
                                   const Lexicon& lexicon = Lexicon::Default(),
                                   const IuSchema& schema = LoadSchema());

// Rule-based linguistic workflow. Same contract as RunLinguisticWorkflow.
LinguisticReport HeuristicLinguistic(const Manuscript& m, SectionKind target,
                                     ContextMode mode,
                                     std::size_t window = kDefaultWindow,
                                     const Lexicon& lexicon = Lexicon::Default());

// Runs the rule engine on the request attachment and answers with the
// formatted text report, so its output always parses.
class HeuristicBackend : public Backend {
 public:
  BackendMode mode() const override { return BackendMode::kHeuristic; }
  ModelOutput Execute(const AnalysisRequest& request) override;
};

}  // namespace manucheck

#endif  // MANUCHECK_HEURISTIC_H_
