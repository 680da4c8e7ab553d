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

#include "qmds/serialization.h"

#include "qmds/error.h"

namespace qmds {

namespace {

Json distance_to_json(const std::optional<DistanceClaim> &claim) {
    if (!claim) {
        return nullptr;
    }
    return Json{{"value", claim->value}, {"basis", claim->basis == DistanceBasis::theorem ? "theorem" : "oracle"}};
}

template <typename T>
T get_or(const Json &json, const char *key, T fallback) {
    auto it = json.find(key);
    return it == json.end() || it->is_null() ? fallback : it->get<T>();
}

template <typename T>
std::optional<T> get_optional(const Json &json, const char *key) {
    auto it = json.find(key);
    if (it == json.end() || it->is_null()) {
        return std::nullopt;
    }
    return it->get<T>();
}

Json candidate_to_json(const FieldCandidate &c) {
    return Json{{"field", short_field_name(c.p, c.e)}, {"p", c.p}, {"e", c.e}, {"order", c.order}};
}

RowSelection selection_from_json(std::size_t n, const Json &json) {
    auto kind = json.at("kind").get<std::string>();
    if (kind == "consecutive") {
        return RowSelection::consecutive(n, json.at("count").get<std::size_t>(), json.at("start").get<std::size_t>());
    }
    if (kind == "arithmetic") {
        return RowSelection::arithmetic(n, json.at("start").get<std::size_t>(), json.at("step").get<std::size_t>(),
                                        json.at("count").get<std::size_t>());
    }
    if (kind == "arbitrary") {
        return RowSelection::arbitrary(n, json.at("rows").get<std::vector<std::size_t>>());
    }
    throw Error(ErrorKind::ParseError, "unknown selection kind '" + kind + "'");
}

FieldPolicy policy_from_json(const Json &json) {
    auto kind = json.at("kind").get<std::string>();
    if (kind == "prime") {
        return FieldPolicy::prime_field();
    }
    if (kind == "smallest") {
        return FieldPolicy::smallest_field();
    }
    if (kind == "characteristic") {
        return FieldPolicy::fixed_characteristic(json.at("p").get<std::uint64_t>());
    }
    throw Error(ErrorKind::ParseError, "unknown field policy '" + kind + "'");
}

}  // namespace

std::string short_field_name(std::uint64_t p, unsigned e) {
    return e == 1 ? "GF(" + std::to_string(p) + ")" : "GF(" + std::to_string(p) + "^" + std::to_string(e) + ")";
}

Json field_to_json(const Field &field) {
    return Json{{"spec", field.to_string()},
                {"p", field.characteristic()},
                {"m", field.degree()},
                {"order", field.order()},
                {"modulus", field.modulus()}};
}

Json selection_to_json(const RowSelection &selection) {
    Json out{{"kind", selection_kind_name(selection.kind())}, {"count", selection.size()}};
    if (selection.kind() != SelectionKind::arbitrary) {
        out["start"] = selection.start();
        out["step"] = selection.step();
    }
    out["rows"] = selection.indices();
    return out;
}

Json generator_to_json(const Matrix &generator) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < generator.rows(); i++) {
        Json row = Json::array();
        for (auto v : generator.row(i)) {
            row.push_back(generator.field()->format(v));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

Json code_to_json(const ClassicalCode &code, const HermitianContext *ctx) {
    const auto &sel = code.selection();
    Json out{{"field", field_to_json(*code.field())},
             {"n", code.length()},
             {"r", code.dimension()},
             {"omega", code.matrix().omega().to_string()},
             {"selection", selection_to_json(sel)},
             {"distance", distance_to_json(code.distance())},
             {"mds", code.is_mds()}};
    out["euclidean"] = Json{{"dual_rows", euclidean_dual_indices(sel)},
                            {"dual_containing", is_euclidean_dual_containing(sel)}};
    if (ctx) {
        auto diag = diagnose_hermitian_containment(sel.indices(), *ctx);
        out["hermitian"] = Json{{"l", ctx->conjugation_exponent()},
                                {"dual_rows", diag.dual_indices},
                                {"dual_containing", diag.dual_containing},
                                {"non_self_dual_rows", non_self_dual_rows(*ctx)},
                                {"missing_non_self_dual_rows", diag.missing_non_self_dual}};
    }
    return out;
}

Json quantum_to_json(const QuantumCodeParams &params) {
    auto singleton = check_quantum_singleton(params);
    Json out{{"display", params.display()},
             {"n", params.n},
             {"k", params.k},
             {"d_lower", params.d_lower},
             {"construction", css_construction_name(params.construction)},
             {"mds", params.mds},
             {"singleton", Json{{"satisfied", singleton.satisfied}, {"saturated", singleton.saturated}}},
             {"field", params.field ? Json(params.field->to_string()) : Json(nullptr)}};
    if (params.construction == CssConstruction::hermitian) {
        out["hermitian_l"] = params.hermitian_l;
    }
    if (params.source) {
        std::optional<HermitianContext> ctx;
        if (params.construction == CssConstruction::hermitian) {
            ctx = HermitianContext::from_matrix(params.source->matrix());
        }
        out["provenance"] = code_to_json(*params.source, ctx ? &*ctx : nullptr);
    } else {
        out["provenance"] = nullptr;
    }
    return out;
}

Json family_to_json(const FamilyRecipe &recipe) {
    Json out{{"p", recipe.p},
             {"s", recipe.s},
             {"l", recipe.l},
             {"q", recipe.q},
             {"n", recipe.n},
             {"row_window", Json{{"start", recipe.window_start}, {"count", recipe.window_count}}},
             {"classical", Json::array({recipe.n, recipe.classical_r, recipe.classical_d})},
             {"quantum", Json::array({recipe.n, recipe.quantum_k, recipe.quantum_d})},
             {"display", "[[" + std::to_string(recipe.n) + "," + std::to_string(recipe.quantum_k) + "," +
                             std::to_string(recipe.quantum_d) + "]]_" + std::to_string(recipe.q)},
             {"rate", format_rational(recipe.rate)}};
    out["materialized"] = recipe.code ? quantum_to_json(*recipe.code) : Json(nullptr);
    return out;
}

Json catalog_to_json(const Field &field, const std::vector<CatalogEntry> &entries) {
    Json rows = Json::array();
    for (const auto &e : entries) {
        rows.push_back(Json{{"r", e.r},
                            {"k", e.k},
                            {"d", e.d},
                            {"display", "[[" + std::to_string(e.n) + "," + std::to_string(e.k) + "," +
                                            std::to_string(e.d) + "]]"}});
    }
    return Json{{"field", field.to_string()}, {"n", field.order() - 1}, {"entries", std::move(rows)}};
}

Json report_to_json(const VerificationReport &report) {
    Json checks = Json::array();
    for (const auto &c : report.checks) {
        checks.push_back(Json{{"name", c.name},
                              {"method", c.method},
                              {"outcome", check_outcome_name(c.outcome)},
                              {"cost", c.cost},
                              {"detail", c.detail}});
    }
    Json out{{"subject", report.subject},
             {"verdict", verdict_name(report.verdict)},
             {"exit_code", verdict_exit_code(report.verdict)},
             {"mds_status", report.mds_status}};
    out["measured_distance"] = report.measured_distance ? Json(*report.measured_distance) : Json(nullptr);
    out["measured_dimension"] = report.measured_dimension ? Json(*report.measured_dimension) : Json(nullptr);
    out["checks"] = std::move(checks);
    return out;
}

Json plan_request_to_json(const PlanRequest &request) {
    Json policy{{"kind", field_policy_name(request.policy.kind)}};
    if (request.policy.kind == FieldPolicyKind::fixed_characteristic) {
        policy["p"] = request.policy.characteristic;
    }
    Json out{{"rate", format_rational(request.rate)}, {"d_min", request.d_min}, {"policy", policy}};
    out["max_distance"] = request.max_distance ? Json(*request.max_distance) : Json(nullptr);
    out["max_length"] = request.max_length ? Json(*request.max_length) : Json(nullptr);
    out["arithmetic_step"] = request.arithmetic_step ? Json(*request.arithmetic_step) : Json(nullptr);
    out["max_field_order"] = request.max_field_order;
    out["candidate_cap"] = request.candidate_cap;
    return out;
}

PlanRequest plan_request_from_json(const Json &json) {
    try {
        PlanRequest out;
        out.rate = parse_rational(json.at("rate").get<std::string>());
        out.d_min = json.at("d_min").get<std::uint64_t>();
        if (json.contains("policy")) {
            out.policy = policy_from_json(json.at("policy"));
        }
        out.max_distance = get_optional<std::uint64_t>(json, "max_distance");
        out.max_length = get_optional<std::uint64_t>(json, "max_length");
        out.arithmetic_step = get_optional<std::uint64_t>(json, "arithmetic_step");
        out.max_field_order = get_or<std::uint64_t>(json, "max_field_order", kDefaultMaxFieldOrder);
        out.candidate_cap = get_or<std::uint64_t>(json, "candidate_cap", 1024);
        return out;
    } catch (const nlohmann::json::exception &e) {
        throw Error(ErrorKind::ParseError, std::string("malformed plan request: ") + e.what());
    }
}

Json plan_result_to_json(const PlanResult &result) {
    Json candidates = Json::array();
    for (const auto &c : result.candidates) {
        candidates.push_back(candidate_to_json(c));
    }
    return Json{{"d", result.d},
                {"n", result.n},
                {"r", result.r},
                {"k", result.k},
                {"field", result.field->to_string()},
                {"omega", result.code.matrix().omega().to_string()},
                {"selection", selection_to_json(result.code.selection())},
                {"classical", code_to_json(result.code)},
                {"quantum", quantum_to_json(result.quantum)},
                {"candidates", std::move(candidates)},
                {"d_steps", result.d_steps},
                {"arithmetic_note", result.arithmetic_note}};
}

PlanResult plan_result_from_json(const Json &json) {
    try {
        auto field = Field::parse(json.at("field").get<std::string>());
        const auto n = json.at("n").get<std::uint64_t>();
        auto omega = field->element(field->parse_element(json.at("omega").get<std::string>()));
        auto matrix = fourier_matrix(field, n, omega);
        auto code = code_from_rows(matrix, selection_from_json(n, json.at("selection")));
        auto quantum = css_from_euclidean(code);
        PlanResult out{json.at("d").get<std::uint64_t>(),
                       n,
                       json.at("r").get<std::uint64_t>(),
                       json.at("k").get<std::uint64_t>(),
                       field,
                       code,
                       quantum,
                       {},
                       json.at("d_steps").get<std::uint64_t>(),
                       json.at("arithmetic_note").get<std::string>()};
        for (const auto &c : json.at("candidates")) {
            out.candidates.push_back(
                {c.at("p").get<std::uint64_t>(), c.at("e").get<unsigned>(), c.at("order").get<std::uint64_t>()});
        }
        if (out.r != code.dimension() || out.k != quantum.k || out.d != quantum.d_lower) {
            throw Error(ErrorKind::ParseError, "stored parameters do not match the rebuilt construction");
        }
        return out;
    } catch (const nlohmann::json::exception &e) {
        throw Error(ErrorKind::ParseError, std::string("malformed plan result: ") + e.what());
    }
}

}  // namespace qmds
