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
 * JSON document formats: structure documents (element table, blocks, mode),
 * probability states, density matrices, and report documents. Serialization
 * is deterministic; build -> serialize -> parse -> serialize round-trips
 * byte-identically.
 *
 * Matrices are stored as row-major lists of [re, im] pairs.
 */

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "qlogic/pasting.hpp"
#include "qlogic/states.hpp"

namespace qlogic {

using Json = nlohmann::json;

enum class StructureMode { Pasted, Partial };

std::string to_string(StructureMode mode);

/// On-disk form of a logic structure.
struct StructureDocument {
    std::string schema_version = "1";
    int dimension = 0;
    StructureMode mode = StructureMode::Pasted;
    std::vector<Subspace> elements;                // index == element id
    std::vector<std::vector<ElementId>> blocks;

    static StructureDocument from(const PastedLogic &logic);
    static StructureDocument from(const PartialLogic &logic);

    /// Rebuilds the live structure. Throws SchemaError or ValidationError.
    PastedLogic to_pasted() const;
    PartialLogic to_partial() const;
};

Json to_json(const StructureDocument &doc);

/// Parses and validates a structure document. Malformed shapes raise
/// SchemaError; well-formed documents with invariant violations (a matrix
/// that is not a projector, a mismatched rank, a block referencing unknown
/// ids) raise ValidationError.
StructureDocument structure_from_json(const Json &j);

/// Matrix payload helpers shared by the document formats.
Json matrix_to_json(const Matrix &m);
Matrix matrix_from_json(const Json &j, const std::string &what);

/// State payload: {"values": {"<id>": "p/q" | number, ...}}; exact values
/// are strings, floating values JSON numbers.
Json state_to_json(const ProbabilityState &state);

/// Density matrix document: {"dimension": d, "matrix": [[re, im], ...]}.
DensityOperator density_from_json(const Json &j);

} // namespace qlogic
