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

#include "qlogic/lattice.hpp"

#include <algorithm>
#include <utility>

namespace qlogic {

namespace {

ElementId find_in(const std::vector<Subspace> &elements, const Subspace &s) {
    for (std::size_t i = 0; i < elements.size(); ++i) {
        if (elements[i] == s) {
            return i;
        }
    }
    return kNoElement;
}

} // namespace

Lattice Lattice::from_subspaces(std::vector<Subspace> input) {
    if (input.empty()) {
        throw ValidationError("lattice needs at least the trivial subspaces");
    }
    const Eigen::Index d = input.front().dim();
    for (const auto &s : input) {
        if (s.dim() != d) {
            throw DimensionMismatchError(
                "lattice elements must share one dimension");
        }
    }

    // Reorder: zero subspace first, full space second, rest as given.
    std::vector<Subspace> elements;
    elements.reserve(input.size());
    const Subspace bottom = Subspace::zero(d);
    const Subspace top = Subspace::full(d);
    elements.push_back(bottom);
    elements.push_back(top);
    bool saw_bottom = false;
    bool saw_top = false;
    for (auto &s : input) {
        if (s == bottom) {
            if (saw_bottom) {
                throw ValidationError("duplicate bottom element");
            }
            saw_bottom = true;
        } else if (s == top) {
            if (saw_top) {
                throw ValidationError("duplicate top element");
            }
            saw_top = true;
        } else {
            if (find_in(elements, s) != kNoElement) {
                throw ValidationError("duplicate lattice element");
            }
            elements.push_back(std::move(s));
        }
    }
    if (!saw_bottom || !saw_top) {
        throw ValidationError(
            "lattice must contain the zero subspace and the full space");
    }

    const std::size_t n = elements.size();
    Lattice lattice;
    lattice.subspaces_ = std::move(elements);
    lattice.meet_table_.assign(n, std::vector<ElementId>(n, kNoElement));
    lattice.join_table_.assign(n, std::vector<ElementId>(n, kNoElement));
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a; b < n; ++b) {
            const Subspace m =
                meet_subspace(lattice.subspaces_[a], lattice.subspaces_[b]);
            const Subspace j =
                join_subspace(lattice.subspaces_[a], lattice.subspaces_[b]);
            const ElementId mi = find_in(lattice.subspaces_, m);
            const ElementId ji = find_in(lattice.subspaces_, j);
            if (mi == kNoElement || ji == kNoElement) {
                throw ValidationError(
                    "element set is not closed under meet and join");
            }
            lattice.meet_table_[a][b] = lattice.meet_table_[b][a] = mi;
            lattice.join_table_[a][b] = lattice.join_table_[b][a] = ji;
        }
    }
    lattice.derive_complements();
    return lattice;
}

Lattice::Lattice(std::size_t count,
                 std::vector<std::vector<ElementId>> meet_table,
                 std::vector<std::vector<ElementId>> join_table,
                 std::vector<ElementId> complements)
    : meet_table_(std::move(meet_table)), join_table_(std::move(join_table)),
      complements_(std::move(complements)) {
    if (count < 2) {
        throw ValidationError("a lattice has at least bottom and top");
    }
    auto square = [count](const auto &table) {
        if (table.size() != count) {
            return false;
        }
        for (const auto &row : table) {
            if (row.size() != count) {
                return false;
            }
            for (ElementId v : row) {
                if (v >= count) {
                    return false;
                }
            }
        }
        return true;
    };
    if (!square(meet_table_) || !square(join_table_)) {
        throw ValidationError("operation tables must be total " +
                              std::to_string(count) + "x" +
                              std::to_string(count) + " grids");
    }
    if (!complements_.empty()) {
        if (complements_.size() != count) {
            throw ValidationError("complement table must be total or empty");
        }
        for (ElementId v : complements_) {
            if (v >= count) {
                throw ValidationError("complement table references unknown id");
            }
        }
    }
    validate_tables();
}

void Lattice::validate_tables() const {
    const std::size_t n = size();
    auto leq_of = [&](ElementId a, ElementId b) {
        return meet_table_[a][b] == a;
    };
    for (std::size_t a = 0; a < n; ++a) {
        if (meet_table_[a][a] != a || join_table_[a][a] != a) {
            throw ValidationError("meet/join must be idempotent");
        }
        if (!leq_of(kBottom, a) || !leq_of(a, kTop)) {
            throw ValidationError("ids 0 and 1 must be bottom and top");
        }
        for (std::size_t b = 0; b < n; ++b) {
            if (meet_table_[a][b] != meet_table_[b][a] ||
                join_table_[a][b] != join_table_[b][a]) {
                throw ValidationError("meet/join must be commutative");
            }
            if (leq_of(a, b) && leq_of(b, a) && a != b) {
                throw ValidationError("order relation is not antisymmetric");
            }
            // Consistency of the two tables with one order.
            if (leq_of(a, b) != (join_table_[a][b] == b)) {
                throw ValidationError("meet and join disagree on the order");
            }
        }
    }
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            const ElementId m = meet_table_[a][b];
            const ElementId j = join_table_[a][b];
            if (!leq_of(m, a) || !leq_of(m, b) || !leq_of(a, j) ||
                !leq_of(b, j)) {
                throw ValidationError("table entries violate bound laws");
            }
            for (std::size_t c = 0; c < n; ++c) {
                if (leq_of(c, a) && leq_of(c, b) && !leq_of(c, m)) {
                    throw ValidationError("meet entry is not the glb");
                }
                if (leq_of(a, c) && leq_of(b, c) && !leq_of(j, c)) {
                    throw ValidationError("join entry is not the lub");
                }
            }
        }
    }
    if (!complements_.empty()) {
        for (std::size_t a = 0; a < n; ++a) {
            const ElementId c = complements_[a];
            if (complements_[c] != a) {
                throw ValidationError("complement must be an involution");
            }
            if (meet_table_[a][c] != kBottom || join_table_[a][c] != kTop) {
                throw ValidationError(
                    "complement entries violate the complement laws");
            }
        }
    }
}

void Lattice::derive_complements() {
    const std::size_t n = size();
    std::vector<ElementId> result(n, kNoElement);
    for (std::size_t a = 0; a < n; ++a) {
        const ElementId c = find(ortho_complement(subspaces_[a]));
        if (c == kNoElement) {
            complements_.clear();
            return; // not orthocomplemented within this element set
        }
        result[a] = c;
    }
    complements_ = std::move(result);
}

void Lattice::check_element(ElementId a) const {
    if (a >= size()) {
        throw UnknownElementError("element id " + std::to_string(a) +
                                  " is out of range");
    }
}

bool Lattice::leq(ElementId a, ElementId b) const {
    check_element(a);
    check_element(b);
    return meet_table_[a][b] == a;
}

ElementId Lattice::meet(ElementId a, ElementId b) const {
    check_element(a);
    check_element(b);
    return meet_table_[a][b];
}

ElementId Lattice::join(ElementId a, ElementId b) const {
    check_element(a);
    check_element(b);
    return join_table_[a][b];
}

ElementId Lattice::complement(ElementId a) const {
    check_element(a);
    if (complements_.empty()) {
        throw QLogicError("lattice has no total complement table");
    }
    return complements_[a];
}

const Subspace &Lattice::subspace(ElementId a) const {
    check_element(a);
    if (!is_subspace_backed()) {
        throw QLogicError("abstract lattice elements have no subspace");
    }
    return subspaces_[a];
}

Eigen::Index Lattice::dim() const {
    if (!is_subspace_backed()) {
        throw QLogicError("abstract lattice has no ambient dimension");
    }
    return subspaces_.front().dim();
}

ElementId Lattice::find(const Subspace &s) const {
    if (!is_subspace_backed()) {
        return kNoElement;
    }
    return find_in(subspaces_, s);
}

std::vector<ElementId> Lattice::atoms() const {
    std::vector<ElementId> result;
    for (ElementId a = 0; a < size(); ++a) {
        if (a == kBottom) {
            continue;
        }
        bool minimal = true;
        for (ElementId b = 0; b < size(); ++b) {
            if (b != kBottom && b != a && leq(b, a)) {
                minimal = false;
                break;
            }
        }
        if (minimal) {
            result.push_back(a);
        }
    }
    return result;
}

bool Lattice::orthogonal(ElementId a, ElementId b) const {
    check_element(a);
    check_element(b);
    if (is_subspace_backed()) {
        return subspaces_[a].projector().orthogonal_to(
            subspaces_[b].projector());
    }
    if (complements_.empty()) {
        throw QLogicError(
            "orthogonality on an abstract lattice needs complements");
    }
    return leq(a, complements_[b]);
}

std::vector<std::vector<ElementId>> Lattice::contexts() const {
    std::vector<std::vector<ElementId>> result;
    std::vector<ElementId> current;
    // Depth-first over ascending ids; a family is emitted as soon as its
    // join reaches top (orthogonal extensions past that point are impossible
    // for projectors and pointless for states).
    auto extend = [&](auto &&self, ElementId next, ElementId joined) -> void {
        for (ElementId c = next; c < size(); ++c) {
            if (c == kBottom || c == kTop) {
                continue;
            }
            bool ok = true;
            for (ElementId m : current) {
                if (!orthogonal(m, c)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) {
                continue;
            }
            current.push_back(c);
            const ElementId j = join_table_[joined][c];
            if (j == kTop) {
                result.push_back(current);
            } else {
                self(self, c + 1, j);
            }
            current.pop_back();
        }
    };
    extend(extend, 2, kBottom);
    return result;
}

std::vector<std::pair<ElementId, ElementId>> Lattice::cover_pairs() const {
    std::vector<std::pair<ElementId, ElementId>> result;
    for (ElementId a = 0; a < size(); ++a) {
        for (ElementId b = 0; b < size(); ++b) {
            if (a == b || !leq(a, b)) {
                continue;
            }
            bool covered = true;
            for (ElementId c = 0; c < size(); ++c) {
                if (c != a && c != b && leq(a, c) && leq(c, b)) {
                    covered = false;
                    break;
                }
            }
            if (covered) {
                result.emplace_back(a, b);
            }
        }
    }
    return result;
}

Lattice closure_lattice(Eigen::Index dim, std::span<const Subspace> generators,
                        std::size_t max_new_elements) {
    std::vector<Subspace> elements;
    elements.push_back(Subspace::zero(dim));
    elements.push_back(Subspace::full(dim));
    for (const auto &g : generators) {
        if (g.dim() != dim) {
            throw DimensionMismatchError(
                "generators must share the requested dimension");
        }
        if (find_in(elements, g) == kNoElement) {
            elements.push_back(g);
        }
    }

    // Saturate under meet and join; new elements are appended in discovery
    // order, which keeps ids deterministic.
    std::size_t added = 0;
    std::size_t fresh_from = 0;
    while (true) {
        const std::size_t n = elements.size();
        std::vector<Subspace> discovered;
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = std::max(a + 1, fresh_from); b < n; ++b) {
                for (const Subspace &candidate :
                     {meet_subspace(elements[a], elements[b]),
                      join_subspace(elements[a], elements[b])}) {
                    if (find_in(elements, candidate) == kNoElement &&
                        find_in(discovered, candidate) == kNoElement) {
                        discovered.push_back(candidate);
                    }
                }
            }
        }
        if (discovered.empty()) {
            break;
        }
        added += discovered.size();
        if (added > max_new_elements) {
            throw ClosureOverflowError("lattice closure exceeded " +
                                       std::to_string(max_new_elements) +
                                       " new elements");
        }
        fresh_from = elements.size();
        for (auto &s : discovered) {
            elements.push_back(std::move(s));
        }
    }
    return Lattice::from_subspaces(std::move(elements));
}

bool is_boolean(const Lattice &lattice) {
    const std::size_t n = lattice.size();
    for (ElementId a = 0; a < n; ++a) {
        for (ElementId b = 0; b < n; ++b) {
            for (ElementId c = 0; c < n; ++c) {
                if (lattice.meet(a, lattice.join(b, c)) !=
                    lattice.join(lattice.meet(a, b), lattice.meet(a, c))) {
                    return false;
                }
            }
        }
    }
    for (ElementId a = 0; a < n; ++a) {
        bool complemented = false;
        for (ElementId b = 0; b < n; ++b) {
            if (lattice.meet(a, b) == Lattice::kBottom &&
                lattice.join(a, b) == Lattice::kTop) {
                complemented = true;
                break;
            }
        }
        if (!complemented) {
            return false;
        }
    }
    return true;
}

bool check_orthomodular(const Lattice &lattice) {
    if (!lattice.has_complements()) {
        throw QLogicError(
            "orthomodularity needs a total complement table");
    }
    for (ElementId a = 0; a < lattice.size(); ++a) {
        for (ElementId b = 0; b < lattice.size(); ++b) {
            if (!lattice.leq(a, b)) {
                continue;
            }
            const ElementId rel = lattice.meet(b, lattice.complement(a));
            if (lattice.join(a, rel) != b) {
                return false;
            }
        }
    }
    return true;
}

} // namespace qlogic
