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

#include "qmds/cli.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "qmds/css_builder.h"
#include "qmds/error.h"
#include "qmds/hermitian_dual.h"
#include "qmds/hermitian_family.h"
#include "qmds/number_theory.h"
#include "qmds/planner.h"
#include "qmds/serialization.h"
#include "qmds/verify.h"

namespace qmds {

namespace {

std::size_t parse_index(std::string_view text) {
    while (!text.empty() && text.front() == ' ') {
        text.remove_prefix(1);
    }
    while (!text.empty() && text.back() == ' ') {
        text.remove_suffix(1);
    }
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
        throw Error(ErrorKind::ParseError, "bad row index '" + std::string(text) + "'");
    }
    return value;
}

std::string join(const std::vector<std::size_t> &values) {
    std::string out;
    for (auto v : values) {
        if (!out.empty()) {
            out += ' ';
        }
        out += std::to_string(v);
    }
    return out.empty() ? "(none)" : out;
}

std::string describe_selection(const RowSelection &s) {
    switch (s.kind()) {
        case SelectionKind::consecutive:
            return "consecutive, start " + std::to_string(s.start()) + ", count " + std::to_string(s.size());
        case SelectionKind::arithmetic:
            return "arithmetic, start " + std::to_string(s.start()) + ", step " + std::to_string(s.step()) +
                   ", count " + std::to_string(s.size());
        case SelectionKind::arbitrary:
            return "arbitrary, count " + std::to_string(s.size());
    }
    return "";
}

std::string describe_distance(const ClassicalCode &code) {
    if (!code.distance()) {
        return "unknown";
    }
    std::string out = std::to_string(code.distance()->value) +
                      (code.distance()->basis == DistanceBasis::theorem ? " (theorem)" : " (oracle)");
    return code.is_mds() ? out + ", MDS" : out;
}

std::string classical_display(const ClassicalCode &code) {
    std::string d = code.distance() ? std::to_string(code.distance()->value) : "?";
    return "[" + std::to_string(code.length()) + "," + std::to_string(code.dimension()) + "," + d + "]";
}

void print_quantum(std::ostream &out, const QuantumCodeParams &q) {
    out << "quantum " << q.display() << (q.mds ? " mds" : "") << " (" << css_construction_name(q.construction)
        << ", distance >= " << q.d_lower << ")\n";
}

void print_report(std::ostream &out, const VerificationReport &report) {
    out << "verify " << report.subject << "\n";
    for (const auto &c : report.checks) {
        out << "  " << c.name << ": " << check_outcome_name(c.outcome) << " [" << c.method << "] " << c.detail
            << "\n";
    }
    out << "mds status: " << report.mds_status << "\n";
    out << "verdict: " << verdict_name(report.verdict) << "\n";
}

struct CommonFlags {
    bool json = false;
    OracleBounds bounds;
};

void add_bounds(CLI::App *cmd, CommonFlags &flags) {
    cmd->add_option("--max-enumeration", flags.bounds.max_enumeration, "Largest q^r enumerated")
        ->capture_default_str();
    cmd->add_option("--max-minor-ops", flags.bounds.max_minor_field_ops, "Largest C(n,r) r^3 for the minor check")
        ->capture_default_str();
    cmd->add_option("--max-minors", flags.bounds.max_minor_subsets, "Largest C(n,r) for the minor check")
        ->capture_default_str();
    cmd->add_option("--max-elimination", flags.bounds.max_elimination_length, "Largest n for Gaussian elimination")
        ->capture_default_str();
}

struct CodeArgs {
    std::string field;
    std::size_t n = 0;
    std::string rows;
    std::optional<std::size_t> consecutive;
    std::size_t start = 0;
    std::string omega;
    bool hermitian = false;
};

void add_code_args(CLI::App *cmd, CodeArgs &args) {
    cmd->add_option("--field", args.field, "Field, e.g. GF(11), GF(2^4), Z_7")->required();
    cmd->add_option("--n", args.n, "Length of the Fourier matrix")->required();
    auto rows = cmd->add_option("--rows", args.rows, "Rows: list, ranges a-b, or start:step:count");
    auto cons = cmd->add_option("--consecutive", args.consecutive, "Take this many consecutive rows");
    rows->excludes(cons);
    cmd->add_option("--start", args.start, "First row for --consecutive")->capture_default_str();
    cmd->add_option("--omega", args.omega, "Primitive n-th root of unity (default: canonical)");
    cmd->add_flag("--hermitian", args.hermitian, "Use the Hermitian inner product over GF(l^2)");
}

struct BuiltCode {
    ClassicalCode code;
    std::optional<HermitianContext> ctx;
};

BuiltCode build_code(const CodeArgs &args) {
    auto field = Field::parse(args.field);
    std::optional<FieldElement> omega;
    if (!args.omega.empty()) {
        omega = field->element(field->parse_element(args.omega));
    }
    auto matrix = fourier_matrix(field, args.n, omega);
    std::optional<RowSelection> selection;
    if (args.consecutive) {
        selection = RowSelection::consecutive(args.n, *args.consecutive, args.start);
    } else if (!args.rows.empty()) {
        selection = parse_rows(args.n, args.rows);
    } else {
        throw Error(ErrorKind::InvalidArgument, "one of --rows or --consecutive is required");
    }
    BuiltCode out{code_from_rows(matrix, *selection), std::nullopt};
    if (args.hermitian) {
        out.ctx = HermitianContext::from_matrix(matrix);
    }
    return out;
}

std::optional<QuantumCodeParams> try_css(const BuiltCode &built, std::string &why) {
    try {
        if (built.ctx) {
            return css_from_hermitian(built.code, *built.ctx);
        }
        return css_from_euclidean(built.code);
    } catch (const Error &e) {
        why = e.what();
        return std::nullopt;
    }
}

void print_code(std::ostream &out, const BuiltCode &built) {
    const auto &code = built.code;
    out << "code " << classical_display(code) << " over " << code.field()->to_string() << "\n";
    out << "omega = " << code.matrix().omega().to_string() << "\n";
    out << "rows: " << describe_selection(code.selection()) << ": " << join(code.selection().indices()) << "\n";
    out << "distance: " << describe_distance(code) << "\n";
    if (built.ctx) {
        auto diag = diagnose_hermitian_containment(code.selection().indices(), *built.ctx);
        out << "hermitian l = " << built.ctx->conjugation_exponent() << "\n";
        out << "non-self-dual rows: " << join(non_self_dual_rows(*built.ctx)) << "\n";
        out << "hermitian dual rows: " << join(diag.dual_indices) << "\n";
        out << "hermitian dual-containing: " << (diag.dual_containing ? "yes" : "no") << "\n";
        if (!diag.missing_non_self_dual.empty()) {
            out << "missing non-self-dual rows: " << join(diag.missing_non_self_dual) << "\n";
        }
    } else {
        out << "euclidean dual rows: " << join(euclidean_dual_indices(code.selection())) << "\n";
        out << "euclidean dual-containing: " << (is_euclidean_dual_containing(code.selection()) ? "yes" : "no")
            << "\n";
    }
}

FieldPolicy parse_policy(const std::string &text, std::optional<std::uint64_t> characteristic) {
    if (characteristic) {
        return FieldPolicy::fixed_characteristic(*characteristic);
    }
    if (text == "prime") {
        return FieldPolicy::prime_field();
    }
    if (text == "smallest") {
        return FieldPolicy::smallest_field();
    }
    for (std::string prefix : {"char:", "char=", "characteristic:", "characteristic="}) {
        if (text.rfind(prefix, 0) == 0) {
            return FieldPolicy::fixed_characteristic(parse_index(std::string_view(text).substr(prefix.size())));
        }
    }
    throw Error(ErrorKind::ParseError, "field policy must be prime, smallest or char:<p>, got '" + text + "'");
}

std::string read_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorKind::InvalidArgument, "cannot read " + path);
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace

RowSelection parse_rows(std::size_t n, std::string_view text) {
    if (std::count(text.begin(), text.end(), ':') == 2) {
        auto a = text.find(':');
        auto b = text.find(':', a + 1);
        return RowSelection::arithmetic(n, parse_index(text.substr(0, a)), parse_index(text.substr(a + 1, b - a - 1)),
                                        parse_index(text.substr(b + 1)));
    }
    std::vector<std::size_t> indices;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto comma = text.find(',', pos);
        auto item = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        auto dots = item.find("..");
        auto dash = item.find('-');
        if (dots != std::string_view::npos || dash != std::string_view::npos) {
            std::size_t cut = dots != std::string_view::npos ? dots : dash;
            std::size_t skip = dots != std::string_view::npos ? 2 : 1;
            std::size_t lo = parse_index(item.substr(0, cut));
            std::size_t hi = parse_index(item.substr(cut + skip));
            if (hi < lo) {
                throw Error(ErrorKind::ParseError, "empty range '" + std::string(item) + "'");
            }
            for (std::size_t i = lo; i <= hi; i++) {
                indices.push_back(i);
            }
        } else {
            indices.push_back(parse_index(item));
        }
        if (comma == std::string_view::npos) {
            break;
        }
        pos = comma + 1;
    }
    for (auto i : indices) {
        if (i >= n) {
            throw Error(ErrorKind::InvalidSelection, "row " + std::to_string(i) + " out of range for n = " +
                                                         std::to_string(n));
        }
    }
    auto sorted = indices;
    std::sort(sorted.begin(), sorted.end());
    bool run = !sorted.empty() && sorted.back() - sorted.front() + 1 == sorted.size() &&
               std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end() &&
               std::is_sorted(indices.begin(), indices.end());
    if (run) {
        return RowSelection::consecutive(n, indices.size(), indices.front());
    }
    return RowSelection::arbitrary(n, std::move(indices));
}

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Quantum MDS codes from Fourier matrices over finite fields", "qmds"};
    app.require_subcommand(1);
    CommonFlags flags;

    // plan
    auto plan_cmd = app.add_subcommand("plan", "Find [[n,k,d]] for a target rate and distance");
    std::string rate_text;
    std::optional<std::uint64_t> distance, correct, characteristic, max_distance, max_length, step;
    std::string policy_text = "prime";
    std::string request_file;
    std::uint64_t candidate_cap = 1024;
    std::string verify_level;
    plan_cmd->add_option("--rate", rate_text, "Target rate k/n, e.g. 3/4");
    auto dist_opt = plan_cmd->add_option("--distance,-d", distance, "Minimum distance");
    plan_cmd->add_option("--correct,-t", correct, "Errors to correct (distance 2t+1)")->excludes(dist_opt);
    plan_cmd->add_option("--field", policy_text, "prime, smallest or char:<p>")->capture_default_str();
    plan_cmd->add_option("--characteristic,-p", characteristic, "Fixed characteristic");
    plan_cmd->add_option("--max-distance", max_distance, "Largest distance tried (default d + 512)");
    plan_cmd->add_option("--max-length", max_length, "Largest length tried");
    plan_cmd->add_option("--step", step, "Arithmetic row step instead of consecutive rows");
    plan_cmd->add_option("--candidate-cap", candidate_cap, "List candidate fields up to this order")
        ->capture_default_str();
    plan_cmd->add_option("--request", request_file, "Read the request from a JSON file");
    plan_cmd->add_option("--verify", verify_level, "Verify the result: fast or full")
        ->check(CLI::IsMember({"fast", "full"}));
    plan_cmd->add_flag("--json", flags.json, "JSON output");
    add_bounds(plan_cmd, flags);

    // build
    auto build_cmd = app.add_subcommand("build", "Build a code from rows of a Fourier matrix");
    CodeArgs code_args;
    bool show_generator = false;
    add_code_args(build_cmd, code_args);
    build_cmd->add_flag("--generator", show_generator, "Print the generator matrix");
    build_cmd->add_flag("--json", flags.json, "JSON output");

    // verify
    auto verify_cmd = app.add_subcommand("verify", "Recompute all claims about a code from first principles");
    CodeArgs verify_args;
    std::string level_text = "full";
    add_code_args(verify_cmd, verify_args);
    verify_cmd->add_option("--level", level_text, "fast or full")
        ->check(CLI::IsMember({"fast", "full"}))
        ->capture_default_str();
    verify_cmd->add_flag("--json", flags.json, "JSON output");
    add_bounds(verify_cmd, flags);

    // catalog
    auto catalog_cmd = app.add_subcommand("catalog", "All [[q-1, k, d]] codes over a given field");
    std::string catalog_field;
    std::optional<std::uint64_t> min_k, min_d;
    catalog_cmd->add_option("--field", catalog_field, "Field")->required();
    catalog_cmd->add_option("--min-k", min_k, "Smallest quantum dimension listed");
    catalog_cmd->add_option("--min-d", min_d, "Smallest distance listed");
    catalog_cmd->add_flag("--json", flags.json, "JSON output");

    // family
    auto family_cmd = app.add_subcommand("family", "[[p^2s-1, p^2s-2p^s+3, p^s-1]] over GF(p^2s)");
    std::uint64_t family_p = 0;
    unsigned family_s = 0;
    FamilyOptions family_options;
    std::string family_verify;
    family_cmd->add_option("--p", family_p, "Characteristic")->required();
    family_cmd->add_option("--s", family_s, "l = p^s")->required();
    family_cmd->add_flag("--materialize", family_options.materialize, "Build the code over GF(p^2s)");
    family_cmd->add_option("--start", family_options.window_start, "First row of the window")
        ->capture_default_str();
    family_cmd->add_option("--max-order", family_options.max_order, "Largest field built")->capture_default_str();
    family_cmd->add_option("--verify", family_verify, "Verify the materialized code: fast or full")
        ->check(CLI::IsMember({"fast", "full"}));
    family_cmd->add_flag("--json", flags.json, "JSON output");
    add_bounds(family_cmd, flags);

    // ord
    auto ord_cmd = app.add_subcommand("ord", "Multiplicative order of t modulo v");
    std::uint64_t ord_t = 0, ord_v = 0;
    ord_cmd->add_option("t", ord_t, "Base")->required();
    ord_cmd->add_option("v", ord_v, "Modulus")->required();
    ord_cmd->add_flag("--json", flags.json, "JSON output");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : kExitError;
    }

    try {
        if (*plan_cmd) {
            PlanRequest request;
            if (!request_file.empty()) {
                request = plan_request_from_json(Json::parse(read_file(request_file)));
            } else {
                if (rate_text.empty()) {
                    throw Error(ErrorKind::InvalidArgument, "--rate is required");
                }
                if (!distance && !correct) {
                    throw Error(ErrorKind::InvalidArgument, "one of --distance or --correct is required");
                }
                request.rate = parse_rational(rate_text);
                request.d_min = distance ? *distance : 2 * *correct + 1;
                request.policy = parse_policy(policy_text, characteristic);
                request.max_distance = max_distance;
                request.max_length = max_length;
                request.arithmetic_step = step;
                request.candidate_cap = candidate_cap;
            }
            auto result = plan(request);
            std::optional<VerificationReport> report;
            if (!verify_level.empty()) {
                report = verify_quantum(result.quantum,
                                        verify_level == "full" ? VerificationLevel::full : VerificationLevel::fast,
                                        flags.bounds);
            }
            if (flags.json) {
                Json doc{{"request", plan_request_to_json(request)}, {"result", plan_result_to_json(result)}};
                if (report) {
                    doc["verification"] = report_to_json(*report);
                }
                out << doc.dump(2) << "\n";
            } else {
                out << "rate " << format_rational(request.rate) << ", distance >= " << request.d_min << "\n";
                out << "chosen d = " << result.d << " after " << result.d_steps << " extra step"
                    << (result.d_steps == 1 ? "" : "s") << "\n";
                out << "n = " << result.n << ", r = " << result.r << ", k = " << result.k << "\n";
                out << "field " << result.field->to_string() << "\n";
                out << "arithmetic: " << result.arithmetic_note << "\n";
                out << "omega = " << result.code.matrix().omega().to_string() << "\n";
                out << "rows: " << describe_selection(result.code.selection()) << "\n";
                out << "classical " << classical_display(result.code) << (result.code.is_mds() ? " mds" : "")
                    << ", euclidean dual-containing\n";
                print_quantum(out, result.quantum);
                out << "candidate fields:";
                for (const auto &c : result.candidates) {
                    out << " " << short_field_name(c.p, c.e);
                }
                out << "\n";
                if (report) {
                    print_report(out, *report);
                }
            }
            return report ? verdict_exit_code(report->verdict) : 0;
        }

        if (*build_cmd) {
            auto built = build_code(code_args);
            std::string why;
            auto quantum = try_css(built, why);
            if (flags.json) {
                Json doc{{"code", code_to_json(built.code, built.ctx ? &*built.ctx : nullptr)}};
                if (show_generator) {
                    doc["generator"] = generator_to_json(built.code.generator());
                }
                doc["quantum"] = quantum ? quantum_to_json(*quantum) : Json(nullptr);
                if (!quantum) {
                    doc["quantum_refused"] = why;
                }
                out << doc.dump(2) << "\n";
            } else {
                print_code(out, built);
                if (show_generator) {
                    out << "generator:\n" << built.code.generator().to_grid();
                }
                if (quantum) {
                    print_quantum(out, *quantum);
                } else {
                    out << "quantum: none (" << why << ")\n";
                }
            }
            return 0;
        }

        if (*verify_cmd) {
            auto built = build_code(verify_args);
            auto level = level_text == "full" ? VerificationLevel::full : VerificationLevel::fast;
            auto product = built.ctx ? InnerProduct::hermitian : InnerProduct::euclidean;
            auto report = verify_classical(built.code, product, level, flags.bounds);
            std::optional<VerificationReport> quantum_report;
            std::optional<QuantumCodeParams> quantum;
            if (report.verdict != Verdict::fail) {
                ClassicalCode code = built.code;
                if (!code.distance() && report.measured_distance) {
                    code = code.with_distance({*report.measured_distance, DistanceBasis::oracle});
                }
                std::string why;
                quantum = try_css(BuiltCode{code, built.ctx}, why);
                if (quantum) {
                    quantum_report = verify_quantum(*quantum, level, flags.bounds);
                }
            }
            const auto &final_report = quantum_report ? *quantum_report : report;
            if (flags.json) {
                Json doc{{"classical", report_to_json(report)}};
                doc["quantum"] = quantum_report ? report_to_json(*quantum_report) : Json(nullptr);
                doc["exit_code"] = verdict_exit_code(final_report.verdict);
                out << doc.dump(2) << "\n";
            } else {
                print_report(out, report);
                if (quantum_report) {
                    print_report(out, *quantum_report);
                }
            }
            return verdict_exit_code(final_report.verdict);
        }

        if (*catalog_cmd) {
            auto field = Field::parse(catalog_field);
            auto entries = best_for_field(*field, CatalogOptions{min_k, min_d});
            if (flags.json) {
                out << catalog_to_json(*field, entries).dump(2) << "\n";
            } else {
                out << "catalog over " << field->to_string() << ", n = " << field->order() - 1 << ", "
                    << entries.size() << " codes\n";
                out << "    r     k     d  code\n";
                for (const auto &e : entries) {
                    std::ostringstream row;
                    row.width(5);
                    row << e.r << " ";
                    row.width(5);
                    row << e.k << " ";
                    row.width(5);
                    row << e.d << "  [[" << e.n << "," << e.k << "," << e.d << "]]";
                    out << row.str() << "\n";
                }
            }
            return 0;
        }

        if (*family_cmd) {
            if (!family_verify.empty()) {
                family_options.materialize = true;
            }
            auto recipe = hermitian_family(family_p, family_s, family_options);
            std::optional<VerificationReport> report;
            if (!family_verify.empty()) {
                report = verify_quantum(*recipe.code,
                                        family_verify == "full" ? VerificationLevel::full : VerificationLevel::fast,
                                        flags.bounds);
            }
            if (flags.json) {
                Json doc = family_to_json(recipe);
                if (report) {
                    doc["verification"] = report_to_json(*report);
                }
                out << doc.dump(2) << "\n";
            } else {
                out << "family p = " << recipe.p << ", s = " << recipe.s << ", l = " << recipe.l << " over GF("
                    << recipe.p << "^" << 2 * recipe.s << ")\n";
                out << "rows " << recipe.window_start << " .. " << recipe.window_start + recipe.window_count - 1
                    << " (mod " << recipe.n << "), count " << recipe.window_count << "\n";
                out << "classical [" << recipe.n << "," << recipe.classical_r << "," << recipe.classical_d << "]\n";
                out << "quantum [[" << recipe.n << "," << recipe.quantum_k << "," << recipe.quantum_d << "]]_"
                    << recipe.q << "\n";
                out << "rate " << format_rational(recipe.rate) << "\n";
                out << (recipe.code ? "materialized and checked: hermitian dual-containing\n"
                                    : "parameters only\n");
                if (report) {
                    print_report(out, *report);
                }
            }
            return report ? verdict_exit_code(report->verdict) : 0;
        }

        if (*ord_cmd) {
            auto e = order_mod(ord_t, ord_v);
            if (flags.json) {
                out << Json{{"t", ord_t}, {"v", ord_v}, {"order", e}}.dump(2) << "\n";
            } else {
                out << e << "\n";
            }
            return 0;
        }
    } catch (const Error &e) {
        if (flags.json) {
            out << Json{{"error", Json{{"kind", error_kind_name(e.kind())}, {"message", e.what()}}}}.dump(2) << "\n";
        }
        err << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const nlohmann::json::exception &e) {
        err << "error: ParseError: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}

}  // namespace qmds
