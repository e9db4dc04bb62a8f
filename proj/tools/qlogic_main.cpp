// Copyright 2026 The qlogic developers

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qlogic/dot.hpp"
#include "qlogic/qubit.hpp"
#include "qlogic/report.hpp"
#include "qlogic/serialize.hpp"

namespace {

using qlogic::Json;
using qlogic::StructureDocument;
using qlogic::StructureMode;

constexpr int kExitSchemaError = 2;
constexpr int kExitValidationError = 3;
constexpr int kExitCheckFailed = 4;

Json read_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw qlogic::SchemaError("cannot open file: " + path);
    }
    try {
        return Json::parse(in);
    } catch (const Json::parse_error &e) {
        throw qlogic::SchemaError("invalid JSON in " + path + ": " + e.what());
    }
}

/// Resolves --structure: a built-in name ("qubit-msigma", "qubit-blocks") or
/// a structure document path, optionally re-interpreted under --mode.
StructureDocument resolve_structure(const std::string &source,
                                    const std::string &mode_flag) {
    StructureDocument doc;
    if (source == "qubit-msigma" || source == "qubit-blocks") {
        const bool partial = mode_flag.empty()
                                 ? source == "qubit-blocks"
                                 : mode_flag == "partial";
        doc = partial
                  ? StructureDocument::from(qlogic::qubit_block_logic())
                  : StructureDocument::from(qlogic::qubit_pasting());
        return doc;
    }
    doc = qlogic::structure_from_json(read_json_file(source));
    if (!mode_flag.empty()) {
        const StructureMode target = mode_flag == "partial"
                                         ? StructureMode::Partial
                                         : StructureMode::Pasted;
        if (target != doc.mode) {
            doc = target == StructureMode::Partial
                      ? StructureDocument::from(doc.to_partial())
                      : StructureDocument::from(doc.to_pasted());
        }
    }
    return doc;
}

void write_output(const std::string &text, const std::string &output_path) {
    if (output_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(output_path);
    if (!out) {
        throw qlogic::QLogicError("cannot write file: " + output_path);
    }
    out << text;
}

struct Options {
    std::string structure;
    std::string mode;
    std::string output;
    std::string format = "dot";
    std::string rho_path;
    std::int64_t preparation = -1;
};

void add_structure_options(CLI::App *cmd, Options &opt) {
    cmd->add_option("--structure", opt.structure,
                    "built-in name (qubit-msigma, qubit-blocks) or document "
                    "path")
        ->required();
    cmd->add_option("--mode", opt.mode, "force pasted or partial mode")
        ->check(CLI::IsMember({"pasted", "partial"}));
    cmd->add_option("--output", opt.output, "output path (default stdout)");
}

int run(int argc, char **argv) {
    CLI::App app{"finite-dimensional quantum logic toolkit"};
    app.require_subcommand(1);
    Options opt;

    CLI::App *build = app.add_subcommand(
        "build", "construct a structure document and write it as JSON");
    add_structure_options(build, opt);

    CLI::App *states = app.add_subcommand(
        "states", "enumerate dispersion-free states (pasted mode) or "
                  "indifference states (partial mode)");
    add_structure_options(states, opt);
    states->add_option("--preparation", opt.preparation,
                       "preparation atom id (partial mode; default: all)");

    CLI::App *verify = app.add_subcommand(
        "verify", "run the invariant battery and report pass/fail per check");
    add_structure_options(verify, opt);
    verify->add_option("--rho", opt.rho_path,
                       "density matrix document for trace-rule checks");

    CLI::App *export_dot = app.add_subcommand(
        "export-dot", "emit the Hasse diagram of the structure");
    add_structure_options(export_dot, opt);
    export_dot->add_option("--format", opt.format, "dot (raw) or json")
        ->check(CLI::IsMember({"json", "dot"}));

    CLI11_PARSE(app, argc, argv);

    const StructureDocument doc = resolve_structure(opt.structure, opt.mode);

    if (build->parsed()) {
        write_output(qlogic::to_json(doc).dump(2) + "\n", opt.output);
        return 0;
    }

    if (states->parsed()) {
        std::optional<qlogic::ElementId> preparation;
        if (opt.preparation >= 0) {
            preparation = static_cast<qlogic::ElementId>(opt.preparation);
        }
        const qlogic::ReportDocument report =
            qlogic::states_report(doc, opt.structure, preparation);
        write_output(report.to_json().dump(2) + "\n", opt.output);
        return 0;
    }

    if (verify->parsed()) {
        std::optional<qlogic::DensityOperator> rho;
        if (!opt.rho_path.empty()) {
            rho = qlogic::density_from_json(read_json_file(opt.rho_path));
        }
        const qlogic::ReportDocument report =
            qlogic::verify_report(doc, opt.structure, rho);
        write_output(report.to_json().dump(2) + "\n", opt.output);
        if (!report.all_passed()) {
            std::cerr << "verification failed; see the checks table\n";
            return kExitCheckFailed;
        }
        return 0;
    }

    // export-dot
    const std::string dot =
        doc.mode == StructureMode::Partial
            ? qlogic::hasse_dot(doc.to_partial())
            : qlogic::hasse_dot(doc.to_pasted().lattice());
    if (opt.format == "json") {
        write_output(Json{{"dot", dot}}.dump(2) + "\n", opt.output);
    } else {
        write_output(dot, opt.output);
    }
    return 0;
}

} // namespace

int main(int argc, char **argv) {
    try {
        return run(argc, argv);
    } catch (const qlogic::SchemaError &e) {
        std::cerr << "schema error: " << e.what() << "\n";
        return kExitSchemaError;
    } catch (const qlogic::CheckFailedError &e) {
        std::cerr << "check failed: " << e.what() << "\n";
        return kExitCheckFailed;
    } catch (const qlogic::QLogicError &e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kExitValidationError;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
