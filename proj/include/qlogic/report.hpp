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

/**
 * @file
 * Report documents: state listings and the verification battery. Every
 * check is named after the invariant it verifies; findings that are
 * expected observations (such as the dispersion-free state count of a full
 * pasting) are reported as passing checks with a detail line.
 */

#pragma once

#include <optional>

#include <nlohmann/json.hpp>

#include "qlogic/serialize.hpp"

namespace qlogic {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct ReportDocument {
    Json structure_summary;
    Json states = Json::array();
    Json classification = Json::array();
    std::vector<CheckResult> checks;
    Json metadata;

    bool all_passed() const;
    Json to_json() const;
};

/// State listing: all dispersion-free states for a pasted structure, or the
/// indifference state per preparation atom (plus the size of the symmetric
/// 0/1 family) for a partial structure. `preparation` narrows the partial
/// listing to one atom.
ReportDocument states_report(const StructureDocument &doc,
                             const std::string &structure_id,
                             std::optional<ElementId> preparation);

/// Full invariant battery over a structure document, optionally checking a
/// density operator against the trace rule on every embedded context.
ReportDocument verify_report(const StructureDocument &doc,
                             const std::string &structure_id,
                             const std::optional<DensityOperator> &rho);

} // namespace qlogic
