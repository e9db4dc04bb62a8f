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
 * Gluing Boolean blocks at their shared trivial elements, two ways:
 *
 *  - PastedLogic: the blocks are merged into one lattice with total meet
 *    and join tables (cross-block values computed by subspace arithmetic).
 *  - PartialLogic: the same element table, but meet and join stay defined
 *    only for pairs that share a block; cross-block queries report
 *    undefined instead of synthesizing a value.
 */

#pragma once

#include <vector>

#include "qlogic/lattice.hpp"

namespace qlogic {

/// Blocks glued at bottom and top with full meet/join tables. Restricting
/// the tables to any block reproduces that block.
class PastedLogic {
  public:
    PastedLogic(Lattice lattice, std::vector<std::vector<ElementId>> blocks);

    const Lattice &lattice() const { return lattice_; }
    const std::vector<std::vector<ElementId>> &blocks() const {
        return blocks_;
    }
    std::size_t size() const { return lattice_.size(); }

  private:
    Lattice lattice_;
    std::vector<std::vector<ElementId>> blocks_;
};

/// Blocks glued at bottom and top with no cross-block operations. Every
/// element records its block membership; the trivial elements belong to all
/// blocks.
class PartialLogic {
  public:
    PartialLogic(std::vector<Subspace> elements,
                 std::vector<std::vector<ElementId>> blocks,
                 std::vector<Lattice> block_lattices);

    std::size_t size() const { return elements_.size(); }
    std::size_t block_count() const { return blocks_.size(); }
    const Subspace &subspace(ElementId a) const;
    const std::vector<std::vector<ElementId>> &blocks() const {
        return blocks_;
    }
    const Lattice &block_lattice(std::size_t block) const;

    /// Indices of the blocks containing the element.
    const std::vector<std::size_t> &blocks_of(ElementId a) const;

    /// True iff the two elements share at least one block, i.e. the meet
    /// (and join) of the pair is defined within the structure.
    bool meet_defined(ElementId a, ElementId b) const;

    /// Meet/join inside the first shared block. Throws QLogicError when the
    /// pair shares no block.
    ElementId meet_within(ElementId a, ElementId b) const;
    ElementId join_within(ElementId a, ElementId b) const;

    std::vector<ElementId> atoms() const;
    bool is_atom(ElementId a) const;

    void check_element(ElementId a) const;

  private:
    std::vector<Subspace> elements_;
    std::vector<std::vector<ElementId>> blocks_;
    std::vector<Lattice> block_lattices_;
    std::vector<std::vector<std::size_t>> membership_;
    // per block: global id -> local id in the block lattice (kNoElement if
    // the element is not a member)
    std::vector<std::vector<ElementId>> to_local_;
};

/// Merges Boolean blocks into one lattice. The element table is the
/// deduplicated union (bottom id 0, top id 1, block elements in order);
/// cross-block meets and joins are completed by subspace arithmetic, adding
/// closure elements if the union is not already closed.
/// Throws BlockNotBooleanError or IncompatibleTrivialsError.
PastedLogic paste_blocks(const std::vector<Lattice> &blocks);

/// Same validation and element table as paste_blocks, but records block
/// membership instead of synthesizing cross-block operations.
PartialLogic partial_logic(const std::vector<Lattice> &blocks);

} // namespace qlogic
