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

#include "qlogic/dot.hpp"

#include <set>
#include <sstream>

namespace qlogic {

namespace {

std::string node_label(ElementId id, int rank) {
    if (id == Lattice::kBottom) {
        return "0";
    }
    if (id == Lattice::kTop) {
        return "1";
    }
    return "e" + std::to_string(id) + " (rank " + std::to_string(rank) + ")";
}

void emit_cover_edges(std::ostream &out, const Lattice &lattice) {
    for (const auto &[lower, upper] : lattice.cover_pairs()) {
        out << "  n" << lower << " -> n" << upper << ";\n";
    }
}

} // namespace

std::string hasse_dot(const Lattice &lattice) {
    std::ostringstream out;
    out << "digraph hasse {\n  rankdir=BT;\n  node [shape=box];\n";
    for (ElementId e = 0; e < lattice.size(); ++e) {
        const int rank =
            lattice.is_subspace_backed() ? lattice.subspace(e).rank() : -1;
        out << "  n" << e << " [label=\"" << node_label(e, rank) << "\"];\n";
    }
    emit_cover_edges(out, lattice);
    out << "}\n";
    return out.str();
}

std::string hasse_dot(const PartialLogic &logic) {
    std::ostringstream out;
    out << "digraph hasse {\n  rankdir=BT;\n  node [shape=box];\n";
    out << "  n" << Lattice::kBottom << " [label=\"0\"];\n";
    out << "  n" << Lattice::kTop << " [label=\"1\"];\n";
    for (std::size_t b = 0; b < logic.block_count(); ++b) {
        out << "  subgraph cluster_" << b << " {\n    label=\"block " << b
            << "\";\n";
        for (ElementId global : logic.blocks()[b]) {
            if (global == Lattice::kBottom || global == Lattice::kTop) {
                continue;
            }
            out << "    n" << global << " [label=\""
                << node_label(global, logic.subspace(global).rank())
                << "\"];\n";
        }
        out << "  }\n";
    }
    // Covers within each block; cross-block order relations are undefined in
    // a partial logic, so no other edges exist.
    std::set<std::pair<ElementId, ElementId>> edges;
    for (std::size_t b = 0; b < logic.block_count(); ++b) {
        const Lattice &block = logic.block_lattice(b);
        const auto &ids = logic.blocks()[b];
        for (const auto &[lower, upper] : block.cover_pairs()) {
            edges.emplace(ids[lower], ids[upper]);
        }
    }
    for (const auto &[lower, upper] : edges) {
        out << "  n" << lower << " -> n" << upper << ";\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace qlogic
