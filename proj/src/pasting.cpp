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

#include "qlogic/pasting.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace qlogic {

namespace {

struct BlockUnion {
    Eigen::Index dim;
    std::vector<Subspace> elements;                // bottom 0, top 1, rest
    std::vector<std::vector<ElementId>> block_ids; // per block, global ids
};

/// Validates the pasting preconditions and builds the deduplicated union
/// element table shared by both pasting flavors.
BlockUnion collect_blocks(const std::vector<Lattice> &blocks) {
    if (blocks.empty()) {
        throw QLogicError("pasting needs at least one block");
    }
    for (const auto &block : blocks) {
        if (!block.is_subspace_backed()) {
            throw QLogicError("pasting needs subspace-backed blocks");
        }
        if (!is_boolean(block)) {
            throw BlockNotBooleanError(
                "every pasted block must be a Boolean algebra");
        }
    }
    const Eigen::Index d = blocks.front().dim();
    for (const auto &block : blocks) {
        if (block.dim() != d ||
            !(block.subspace(Lattice::kBottom) == Subspace::zero(d)) ||
            !(block.subspace(Lattice::kTop) == Subspace::full(d))) {
            throw IncompatibleTrivialsError(
                "blocks must share the same bottom and top elements");
        }
    }

    BlockUnion result;
    result.dim = d;
    result.elements.push_back(Subspace::zero(d));
    result.elements.push_back(Subspace::full(d));
    auto global_id = [&result](const Subspace &s) {
        for (std::size_t i = 0; i < result.elements.size(); ++i) {
            if (result.elements[i] == s) {
                return i;
            }
        }
        result.elements.push_back(s);
        return result.elements.size() - 1;
    };
    std::set<std::vector<ElementId>> seen;
    for (const auto &block : blocks) {
        std::vector<ElementId> ids;
        ids.reserve(block.size());
        for (ElementId local = 0; local < block.size(); ++local) {
            ids.push_back(global_id(block.subspace(local)));
        }
        std::vector<ElementId> key = ids;
        std::sort(key.begin(), key.end());
        if (seen.insert(std::move(key)).second) {
            result.block_ids.push_back(std::move(ids));
        }
    }
    return result;
}

} // namespace

PastedLogic::PastedLogic(Lattice lattice,
                         std::vector<std::vector<ElementId>> blocks)
    : lattice_(std::move(lattice)), blocks_(std::move(blocks)) {
    for (const auto &block : blocks_) {
        for (ElementId id : block) {
            lattice_.check_element(id);
        }
    }
}

PastedLogic paste_blocks(const std::vector<Lattice> &blocks) {
    BlockUnion u = collect_blocks(blocks);
    // Closing the union under meet and join keeps the tables total; for
    // blocks over C^2 every cross-block meet is {0} and every join is the
    // full space, so nothing is added there.
    Lattice merged = closure_lattice(u.dim, u.elements);
    std::vector<std::vector<ElementId>> remapped;
    remapped.reserve(u.block_ids.size());
    for (const auto &ids : u.block_ids) {
        std::vector<ElementId> block;
        block.reserve(ids.size());
        for (ElementId id : ids) {
            block.push_back(merged.find(u.elements[id]));
        }
        remapped.push_back(std::move(block));
    }
    return PastedLogic(std::move(merged), std::move(remapped));
}

PartialLogic partial_logic(const std::vector<Lattice> &blocks) {
    BlockUnion u = collect_blocks(blocks);
    std::vector<Lattice> kept;
    kept.reserve(u.block_ids.size());
    std::set<std::vector<ElementId>> seen;
    for (const auto &block : blocks) {
        std::vector<ElementId> key;
        for (ElementId local = 0; local < block.size(); ++local) {
            for (std::size_t g = 0; g < u.elements.size(); ++g) {
                if (u.elements[g] == block.subspace(local)) {
                    key.push_back(g);
                    break;
                }
            }
        }
        std::sort(key.begin(), key.end());
        if (seen.insert(std::move(key)).second) {
            kept.push_back(block);
        }
    }
    return PartialLogic(std::move(u.elements), std::move(u.block_ids),
                        std::move(kept));
}

PartialLogic::PartialLogic(std::vector<Subspace> elements,
                           std::vector<std::vector<ElementId>> blocks,
                           std::vector<Lattice> block_lattices)
    : elements_(std::move(elements)), blocks_(std::move(blocks)),
      block_lattices_(std::move(block_lattices)) {
    if (blocks_.size() != block_lattices_.size()) {
        throw QLogicError("block table and block lattices disagree");
    }
    membership_.assign(elements_.size(), {});
    to_local_.assign(blocks_.size(),
                     std::vector<ElementId>(elements_.size(), kNoElement));
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        if (blocks_[b].size() != block_lattices_[b].size()) {
            throw QLogicError("block member list and lattice size disagree");
        }
        for (ElementId local = 0; local < blocks_[b].size(); ++local) {
            const ElementId global = blocks_[b][local];
            if (global >= elements_.size()) {
                throw UnknownElementError("block references unknown element");
            }
            membership_[global].push_back(b);
            to_local_[b][global] = local;
        }
    }
}

void PartialLogic::check_element(ElementId a) const {
    if (a >= elements_.size()) {
        throw UnknownElementError("element id " + std::to_string(a) +
                                  " is out of range");
    }
}

const Subspace &PartialLogic::subspace(ElementId a) const {
    check_element(a);
    return elements_[a];
}

const Lattice &PartialLogic::block_lattice(std::size_t block) const {
    if (block >= block_lattices_.size()) {
        throw UnknownElementError("block index out of range");
    }
    return block_lattices_[block];
}

const std::vector<std::size_t> &PartialLogic::blocks_of(ElementId a) const {
    check_element(a);
    return membership_[a];
}

bool PartialLogic::meet_defined(ElementId a, ElementId b) const {
    check_element(a);
    check_element(b);
    for (std::size_t block : membership_[a]) {
        if (to_local_[block][b] != kNoElement) {
            return true;
        }
    }
    return false;
}

ElementId PartialLogic::meet_within(ElementId a, ElementId b) const {
    check_element(a);
    check_element(b);
    for (std::size_t block : membership_[a]) {
        if (to_local_[block][b] != kNoElement) {
            const ElementId local = block_lattices_[block].meet(
                to_local_[block][a], to_local_[block][b]);
            return blocks_[block][local];
        }
    }
    throw QLogicError("meet is undefined for this pair");
}

ElementId PartialLogic::join_within(ElementId a, ElementId b) const {
    check_element(a);
    check_element(b);
    for (std::size_t block : membership_[a]) {
        if (to_local_[block][b] != kNoElement) {
            const ElementId local = block_lattices_[block].join(
                to_local_[block][a], to_local_[block][b]);
            return blocks_[block][local];
        }
    }
    throw QLogicError("join is undefined for this pair");
}

std::vector<ElementId> PartialLogic::atoms() const {
    std::vector<ElementId> result;
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        for (ElementId local : block_lattices_[b].atoms()) {
            const ElementId global = blocks_[b][local];
            if (std::find(result.begin(), result.end(), global) ==
                result.end()) {
                result.push_back(global);
            }
        }
    }
    std::sort(result.begin(), result.end());
    return result;
}

bool PartialLogic::is_atom(ElementId a) const {
    check_element(a);
    const auto all = atoms();
    return std::find(all.begin(), all.end(), a) != all.end();
}

} // namespace qlogic
