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
 * Finite lattices with total meet/join tables, either backed by concrete
 * subspaces (tables derived from subspace arithmetic) or abstract (tables
 * supplied directly, which lets tests build counterexamples such as the
 * hexagon that no subspace family provides).
 *
 * Element ids are stable: bottom is always 0, top is always 1, and the
 * remaining elements keep their insertion order.
 */

#pragma once

#include <optional>
#include <span>
#include <vector>

#include "qlogic/linalg.hpp"

namespace qlogic {

class Lattice {
  public:
    static constexpr ElementId kBottom = 0;
    static constexpr ElementId kTop = 1;

    /// Builds a lattice from a subspace family that is already closed under
    /// meet and join and contains the trivial subspaces. Elements are
    /// reordered so the zero subspace gets id 0 and the full space id 1;
    /// all other elements keep their relative order.
    /// Throws ValidationError when the family is not closed, misses a
    /// trivial element, or contains duplicates.
    static Lattice from_subspaces(std::vector<Subspace> elements);

    /// Builds an abstract lattice from explicit operation tables. The meet
    /// and join tables must be total; `complements` may be empty (no
    /// orthocomplement) or a full involution. Tables are validated
    /// exhaustively (partial order, glb/lub laws, bottom/top ids).
    Lattice(std::size_t count, std::vector<std::vector<ElementId>> meet_table,
            std::vector<std::vector<ElementId>> join_table,
            std::vector<ElementId> complements = {});

    std::size_t size() const { return meet_table_.size(); }

    bool leq(ElementId a, ElementId b) const;
    ElementId meet(ElementId a, ElementId b) const;
    ElementId join(ElementId a, ElementId b) const;

    /// True iff every element has an orthocomplement in the table.
    bool has_complements() const { return !complements_.empty(); }
    ElementId complement(ElementId a) const;

    bool is_subspace_backed() const { return !subspaces_.empty(); }
    const Subspace &subspace(ElementId a) const;
    Eigen::Index dim() const;

    /// Id of the element equal to the given subspace, or kNoElement.
    ElementId find(const Subspace &s) const;

    /// Minimal nonzero elements, ascending by id.
    std::vector<ElementId> atoms() const;

    /// Orthogonality: vanishing projector products for subspace-backed
    /// lattices, a <= complement(b) for abstract ones (complements required).
    bool orthogonal(ElementId a, ElementId b) const;

    /// All families of mutually orthogonal nontrivial elements whose join is
    /// the top element; each is one complete measurement embedded in the
    /// lattice. Families are emitted in ascending lexicographic id order.
    std::vector<std::vector<ElementId>> contexts() const;

    /// Pairs (a, b) of the cover relation: a < b with nothing in between.
    std::vector<std::pair<ElementId, ElementId>> cover_pairs() const;

    void check_element(ElementId a) const;

  private:
    Lattice() = default;
    void derive_complements();
    void validate_tables() const;

    std::vector<Subspace> subspaces_; // empty for abstract lattices
    std::vector<std::vector<ElementId>> meet_table_;
    std::vector<std::vector<ElementId>> join_table_;
    std::vector<ElementId> complements_; // empty when not total
};

/// Smallest lattice of subspaces containing the generators, the zero
/// subspace, and the full space, closed under meet and join. Generator sets
/// whose closure grows past the cap (pathological in dimension 3 and up)
/// raise ClosureOverflowError.
Lattice closure_lattice(Eigen::Index dim, std::span<const Subspace> generators,
                        std::size_t max_new_elements = 10000);

/// Distributivity over all element triples plus existence of a complement
/// for every element within the lattice.
bool is_boolean(const Lattice &lattice);

/// Orthomodular law a <= b  =>  b = a v (b ^ a'), checked exhaustively.
/// Requires a total complement table.
bool check_orthomodular(const Lattice &lattice);

} // namespace qlogic
