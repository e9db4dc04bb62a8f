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

#include "qlogic/serialize.hpp"

#include <nlohmann/json.hpp>

namespace qlogic {

namespace {

const Json &require_field(const Json &j, const char *key) {
    if (!j.is_object() || !j.contains(key)) {
        throw SchemaError(std::string("missing field \"") + key + "\"");
    }
    return j.at(key);
}

} // namespace

std::string to_string(StructureMode mode) {
    return mode == StructureMode::Pasted ? "pasted" : "partial";
}

Json matrix_to_json(const Matrix &m) {
    Json entries = Json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            entries.push_back(Json::array({m(r, c).real(), m(r, c).imag()}));
        }
    }
    return entries;
}

Matrix matrix_from_json(const Json &j, const std::string &what) {
    if (!j.is_array()) {
        throw SchemaError(what + ": matrix must be an array of [re, im] pairs");
    }
    const std::size_t total = j.size();
    Eigen::Index d = 0;
    while (static_cast<std::size_t>(d) * static_cast<std::size_t>(d) < total) {
        ++d;
    }
    if (static_cast<std::size_t>(d) * static_cast<std::size_t>(d) != total ||
        d == 0) {
        throw SchemaError(what + ": matrix entry count is not a square");
    }
    Matrix m(d, d);
    for (Eigen::Index r = 0; r < d; ++r) {
        for (Eigen::Index c = 0; c < d; ++c) {
            const Json &pair = j.at(static_cast<std::size_t>(r * d + c));
            if (!pair.is_array() || pair.size() != 2 ||
                !pair.at(0).is_number() || !pair.at(1).is_number()) {
                throw SchemaError(what + ": matrix entries must be [re, im]");
            }
            m(r, c) = Complex(pair.at(0).get<double>(),
                              pair.at(1).get<double>());
        }
    }
    return m;
}

StructureDocument StructureDocument::from(const PastedLogic &logic) {
    StructureDocument doc;
    doc.mode = StructureMode::Pasted;
    doc.dimension = static_cast<int>(logic.lattice().dim());
    doc.elements.reserve(logic.size());
    for (ElementId e = 0; e < logic.size(); ++e) {
        doc.elements.push_back(logic.lattice().subspace(e));
    }
    doc.blocks = logic.blocks();
    return doc;
}

StructureDocument StructureDocument::from(const PartialLogic &logic) {
    StructureDocument doc;
    doc.mode = StructureMode::Partial;
    doc.dimension = static_cast<int>(logic.subspace(0).dim());
    doc.elements.reserve(logic.size());
    for (ElementId e = 0; e < logic.size(); ++e) {
        doc.elements.push_back(logic.subspace(e));
    }
    doc.blocks = logic.blocks();
    return doc;
}

namespace {

/// Builds one block's lattice and the global-id list aligned with the
/// lattice's local ids (bottom first, top second, rest in listed order).
std::pair<Lattice, std::vector<ElementId>>
aligned_block(const StructureDocument &doc, const std::vector<ElementId> &ids) {
    std::vector<ElementId> aligned{kNoElement, kNoElement};
    std::vector<Subspace> members;
    members.reserve(ids.size());
    const Eigen::Index d = doc.dimension;
    for (ElementId id : ids) {
        if (id >= doc.elements.size()) {
            throw ValidationError("block references unknown element id " +
                                  std::to_string(id));
        }
        const Subspace &s = doc.elements[id];
        if (s == Subspace::zero(d)) {
            aligned[0] = id;
        } else if (s == Subspace::full(d)) {
            aligned[1] = id;
        } else {
            aligned.push_back(id);
        }
        members.push_back(s);
    }
    if (aligned[0] == kNoElement || aligned[1] == kNoElement) {
        throw ValidationError(
            "every block must contain the bottom and top elements");
    }
    Lattice lattice = Lattice::from_subspaces(std::move(members));
    if (!is_boolean(lattice)) {
        throw BlockNotBooleanError("a declared block is not Boolean");
    }
    return {std::move(lattice), std::move(aligned)};
}

} // namespace

PastedLogic StructureDocument::to_pasted() const {
    // The document's element order is authoritative; the lattice is rebuilt
    // over exactly that table so ids survive the round trip.
    Lattice lattice = Lattice::from_subspaces(elements);
    std::vector<std::vector<ElementId>> checked_blocks;
    checked_blocks.reserve(blocks.size());
    for (const auto &ids : blocks) {
        checked_blocks.push_back(aligned_block(*this, ids).second);
    }
    return PastedLogic(std::move(lattice), std::move(checked_blocks));
}

PartialLogic StructureDocument::to_partial() const {
    if (blocks.empty()) {
        throw ValidationError("partial mode requires a block table");
    }
    std::vector<Lattice> block_lattices;
    std::vector<std::vector<ElementId>> aligned_ids;
    block_lattices.reserve(blocks.size());
    aligned_ids.reserve(blocks.size());
    std::vector<bool> covered(elements.size(), false);
    for (const auto &ids : blocks) {
        auto [lattice, aligned] = aligned_block(*this, ids);
        for (ElementId id : aligned) {
            covered[id] = true;
        }
        block_lattices.push_back(std::move(lattice));
        aligned_ids.push_back(std::move(aligned));
    }
    for (std::size_t id = 0; id < covered.size(); ++id) {
        if (!covered[id]) {
            throw ValidationError("element " + std::to_string(id) +
                                  " belongs to no block");
        }
    }
    return PartialLogic(elements, std::move(aligned_ids),
                        std::move(block_lattices));
}

Json to_json(const StructureDocument &doc) {
    Json elements = Json::array();
    for (std::size_t id = 0; id < doc.elements.size(); ++id) {
        elements.push_back(Json{
            {"id", id},
            {"matrix", matrix_to_json(doc.elements[id].matrix())},
            {"rank", doc.elements[id].rank()},
        });
    }
    return Json{
        {"schema-version", doc.schema_version},
        {"dimension", doc.dimension},
        {"mode", to_string(doc.mode)},
        {"elements", std::move(elements)},
        {"blocks", doc.blocks},
    };
}

StructureDocument structure_from_json(const Json &j) {
    StructureDocument doc;
    const Json &version = require_field(j, "schema-version");
    if (!version.is_string() || version.get<std::string>() != "1") {
        throw SchemaError("unsupported schema-version");
    }
    doc.schema_version = version.get<std::string>();

    const Json &dimension = require_field(j, "dimension");
    if (!dimension.is_number_integer() || dimension.get<int>() < 1) {
        throw SchemaError("dimension must be a positive integer");
    }
    doc.dimension = dimension.get<int>();

    const Json &mode = require_field(j, "mode");
    if (!mode.is_string()) {
        throw SchemaError("mode must be a string");
    }
    if (mode.get<std::string>() == "pasted") {
        doc.mode = StructureMode::Pasted;
    } else if (mode.get<std::string>() == "partial") {
        doc.mode = StructureMode::Partial;
    } else {
        throw SchemaError("mode must be \"pasted\" or \"partial\"");
    }

    const Json &elements = require_field(j, "elements");
    if (!elements.is_array() || elements.size() < 2) {
        throw SchemaError("elements must list at least bottom and top");
    }
    doc.elements.reserve(elements.size());
    for (std::size_t id = 0; id < elements.size(); ++id) {
        const Json &entry = elements.at(id);
        const Json &entry_id = require_field(entry, "id");
        if (!entry_id.is_number_unsigned() ||
            entry_id.get<std::size_t>() != id) {
            throw SchemaError("element ids must be 0..n-1 in order");
        }
        Matrix m = matrix_from_json(require_field(entry, "matrix"),
                                    "element " + std::to_string(id));
        if (m.rows() != doc.dimension) {
            throw ValidationError("element " + std::to_string(id) +
                                  " dimension disagrees with the document");
        }
        if (!is_projector(m)) {
            throw ValidationError("element " + std::to_string(id) +
                                  " matrix is not a projector");
        }
        Subspace s{Projector(std::move(m))};
        const Json &rank = require_field(entry, "rank");
        if (!rank.is_number_integer() || rank.get<int>() != s.rank()) {
            throw ValidationError("element " + std::to_string(id) +
                                  " rank disagrees with its matrix");
        }
        doc.elements.push_back(std::move(s));
    }

    const Json &blocks = require_field(j, "blocks");
    if (!blocks.is_array()) {
        throw SchemaError("blocks must be an array of id lists");
    }
    for (const Json &block : blocks) {
        if (!block.is_array()) {
            throw SchemaError("each block must be an id list");
        }
        std::vector<ElementId> ids;
        ids.reserve(block.size());
        for (const Json &id : block) {
            if (!id.is_number_unsigned()) {
                throw SchemaError("block ids must be nonnegative integers");
            }
            if (id.get<std::size_t>() >= doc.elements.size()) {
                throw ValidationError("block references unknown element id " +
                                      std::to_string(id.get<std::size_t>()));
            }
            ids.push_back(id.get<std::size_t>());
        }
        doc.blocks.push_back(std::move(ids));
    }

    const Eigen::Index d = doc.dimension;
    if (!(doc.elements[Lattice::kBottom] == Subspace::zero(d)) ||
        !(doc.elements[Lattice::kTop] == Subspace::full(d))) {
        throw ValidationError(
            "ids 0 and 1 must be the zero subspace and the full space");
    }
    return doc;
}

Json state_to_json(const ProbabilityState &state) {
    Json values = Json::object();
    for (std::size_t id = 0; id < state.values.size(); ++id) {
        const StateValue &v = state.values[id];
        if (v.exact()) {
            values[std::to_string(id)] = v.fraction().str();
        } else {
            values[std::to_string(id)] = v.value();
        }
    }
    return Json{{"values", std::move(values)}};
}

DensityOperator density_from_json(const Json &j) {
    const Json &dimension = require_field(j, "dimension");
    if (!dimension.is_number_integer() || dimension.get<int>() < 1) {
        throw SchemaError("dimension must be a positive integer");
    }
    Matrix m = matrix_from_json(require_field(j, "matrix"), "density matrix");
    if (m.rows() != dimension.get<int>()) {
        throw ValidationError(
            "density matrix dimension disagrees with the document");
    }
    return DensityOperator(std::move(m));
}

} // namespace qlogic
