// Copyright 2026 The qmds Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QMDS_SERIALIZATION_H
#define QMDS_SERIALIZATION_H

#include <vector>

#include "json.hpp"
#include "qmds/css_builder.h"
#include "qmds/fourier_code.h"
#include "qmds/hermitian_dual.h"
#include "qmds/hermitian_family.h"
#include "qmds/planner.h"
#include "qmds/verify.h"

namespace qmds {

using Json = nlohmann::ordered_json;

// "GF(p)" or "GF(p^e)" without the modulus.
std::string short_field_name(std::uint64_t p, unsigned e);

Json field_to_json(const Field &field);
Json selection_to_json(const RowSelection &selection);
Json generator_to_json(const Matrix &generator);
// Hermitian block added when ctx is given.
Json code_to_json(const ClassicalCode &code, const HermitianContext *ctx = nullptr);
Json quantum_to_json(const QuantumCodeParams &params);
Json family_to_json(const FamilyRecipe &recipe);
Json catalog_to_json(const Field &field, const std::vector<CatalogEntry> &entries);
Json report_to_json(const VerificationReport &report);

Json plan_request_to_json(const PlanRequest &request);
// Throws ParseError.
PlanRequest plan_request_from_json(const Json &json);
Json plan_result_to_json(const PlanResult &result);
// Rebuilds the construction from field, omega and rows and checks that it
// reproduces the stored parameters. Throws ParseError.
PlanResult plan_result_from_json(const Json &json);

}  // namespace qmds

#endif
