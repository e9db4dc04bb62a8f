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

#include "qlogic/states.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <optional>
#include <utility>

namespace qlogic {

namespace {

bool near(double a, double b) { return std::abs(a - b) < kEpsilon; }

void require_total(std::size_t have, std::size_t want) {
    if (have != want) {
        throw MissingElementError("value map covers " + std::to_string(have) +
                                  " of " + std::to_string(want) + " elements");
    }
}

bool values_in_range(const std::vector<double> &values) {
    for (double v : values) {
        if (!std::isfinite(v) || v < -kEpsilon || v > 1.0 + kEpsilon) {
            return false;
        }
    }
    return true;
}

} // namespace

Fraction::Fraction(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    if (den_ == 0) {
        throw QLogicError("fraction denominator must be nonzero");
    }
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    const std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

std::string Fraction::str() const {
    if (den_ == 1) {
        return std::to_string(num_);
    }
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Fraction operator+(const Fraction &a, const Fraction &b) {
    return Fraction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

StateValue StateValue::rational(Fraction f) {
    StateValue v;
    v.exact_ = true;
    v.fraction_ = f;
    v.value_ = f.to_double();
    return v;
}

StateValue StateValue::decimal(double value) {
    StateValue v;
    v.exact_ = false;
    v.value_ = value;
    return v;
}

const Fraction &StateValue::fraction() const {
    if (!exact_) {
        throw QLogicError("state value is not exact");
    }
    return fraction_;
}

std::string StateValue::repr() const {
    if (exact_) {
        return fraction_.str();
    }
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value_);
    return buffer;
}

std::vector<double> ProbabilityState::as_doubles() const {
    std::vector<double> result;
    result.reserve(values.size());
    for (const auto &v : values) {
        result.push_back(v.value());
    }
    return result;
}

DensityOperator::DensityOperator(Matrix matrix) : matrix_(std::move(matrix)) {
    if (matrix_.rows() == 0 || matrix_.rows() != matrix_.cols() ||
        !matrix_.allFinite()) {
        throw ValidationError("density matrix must be square and finite");
    }
    if ((matrix_ - matrix_.adjoint()).norm() >= kEpsilon) {
        throw ValidationError("density matrix is not Hermitian");
    }
    Eigen::SelfAdjointEigenSolver<Matrix> solver(matrix_);
    if (solver.eigenvalues().minCoeff() < -kEpsilon) {
        throw ValidationError("density matrix has a negative eigenvalue");
    }
    if (!near(matrix_.trace().real(), 1.0)) {
        throw ValidationError("density matrix trace must be 1");
    }
}

DensityOperator DensityOperator::pure(const Ket &psi) {
    return DensityOperator(projector_from_ket(psi).matrix());
}

DensityOperator DensityOperator::maximally_mixed(Eigen::Index dim) {
    return DensityOperator(Matrix::Identity(dim, dim) /
                           static_cast<double>(dim));
}

std::string to_string(EventClass c) {
    switch (c) {
    case EventClass::Certain:
        return "certain";
    case EventClass::Impossible:
        return "impossible";
    case EventClass::Indeterminate:
        return "indeterminate";
    }
    return "unknown";
}

// --- state validation ------------------------------------------------------

bool validate_state(const Lattice &structure,
                    const std::vector<double> &values) {
    require_total(values.size(), structure.size());
    if (!values_in_range(values)) {
        return false;
    }
    if (!near(values[Lattice::kBottom], 0.0) ||
        !near(values[Lattice::kTop], 1.0)) {
        return false;
    }
    // Abstract lattices without an orthocomplement carry no orthogonality
    // relation, so only the normalization requirements apply.
    if (!structure.is_subspace_backed() && !structure.has_complements()) {
        return true;
    }
    for (const auto &context : structure.contexts()) {
        double sum = 0.0;
        for (ElementId e : context) {
            sum += values[e];
        }
        if (!near(sum, 1.0)) {
            return false;
        }
    }
    for (ElementId a = 0; a < structure.size(); ++a) {
        for (ElementId b = a + 1; b < structure.size(); ++b) {
            if (!structure.orthogonal(a, b)) {
                continue;
            }
            if (!near(values[structure.join(a, b)], values[a] + values[b])) {
                return false;
            }
        }
    }
    return true;
}

bool validate_state(const Lattice &structure, const ProbabilityState &state) {
    return validate_state(structure, state.as_doubles());
}

bool validate_state(const PartialLogic &structure,
                    const std::vector<double> &values) {
    require_total(values.size(), structure.size());
    if (!values_in_range(values)) {
        return false;
    }
    const ElementId bottom = Lattice::kBottom;
    const ElementId top = Lattice::kTop;
    if (!near(values[bottom], 0.0) || !near(values[top], 1.0)) {
        return false;
    }
    for (std::size_t b = 0; b < structure.block_count(); ++b) {
        const Lattice &block = structure.block_lattice(b);
        const auto &ids = structure.blocks()[b];
        std::vector<double> local(block.size());
        for (ElementId l = 0; l < block.size(); ++l) {
            local[l] = values[ids[l]];
        }
        if (!validate_state(block, local)) {
            return false;
        }
    }
    return true;
}

bool validate_state(const PartialLogic &structure,
                    const ProbabilityState &state) {
    return validate_state(structure, state.as_doubles());
}

// --- dispersion-free enumeration -------------------------------------------

namespace {

/// Forced extension of an atom assignment: an element is true iff some true
/// atom lies below it (additivity leaves no other choice).
std::vector<double> complete_assignment(const Lattice &structure,
                                        const std::vector<ElementId> &atoms,
                                        const std::vector<int> &bits) {
    std::vector<double> values(structure.size(), 0.0);
    for (ElementId e = 1; e < structure.size(); ++e) {
        for (std::size_t i = 0; i < atoms.size(); ++i) {
            if (bits[i] == 1 && structure.leq(atoms[i], e)) {
                values[e] = 1.0;
                break;
            }
        }
    }
    return values;
}

} // namespace

EnumerationResult enumerate_dispersion_free(const Lattice &structure,
                                            std::string structure_id) {
    EnumerationResult result;
    result.structure_id = std::move(structure_id);
    const std::vector<ElementId> atoms = structure.atoms();
    result.atom_count = atoms.size();

    // Contexts consisting purely of atoms drive the exactly-one-true pruning;
    // everything else is re-checked by the final validation filter.
    std::vector<std::vector<std::size_t>> atom_contexts;
    if (structure.is_subspace_backed() || structure.has_complements()) {
        for (const auto &context : structure.contexts()) {
            std::vector<std::size_t> positions;
            for (ElementId e : context) {
                const auto it = std::find(atoms.begin(), atoms.end(), e);
                if (it == atoms.end()) {
                    positions.clear();
                    break;
                }
                positions.push_back(
                    static_cast<std::size_t>(it - atoms.begin()));
            }
            if (!positions.empty()) {
                atom_contexts.push_back(std::move(positions));
            }
        }
    }

    std::vector<int> bits(atoms.size(), -1);
    std::vector<ProbabilityState> found;

    auto consistent = [&](std::size_t last) {
        for (const auto &context : atom_contexts) {
            if (std::find(context.begin(), context.end(), last) ==
                context.end()) {
                continue;
            }
            int ones = 0;
            bool complete = true;
            for (std::size_t i : context) {
                if (bits[i] == 1) {
                    ++ones;
                } else if (bits[i] == -1) {
                    complete = false;
                }
            }
            if (ones > 1 || (complete && ones != 1)) {
                return false;
            }
        }
        return true;
    };

    auto emit = [&]() {
        const std::vector<double> values =
            complete_assignment(structure, atoms, bits);
        if (!validate_state(structure, values)) {
            return;
        }
        ProbabilityState state;
        state.structure_id = result.structure_id;
        state.values.reserve(values.size());
        for (double v : values) {
            state.values.push_back(
                StateValue::rational(Fraction(v > 0.5 ? 1 : 0, 1)));
        }
        found.push_back(std::move(state));
    };

    auto search = [&](auto &&self, std::size_t i) -> void {
        ++result.search_nodes;
        if (i == atoms.size()) {
            emit();
            return;
        }
        for (int bit : {0, 1}) {
            bits[i] = bit;
            if (consistent(i)) {
                self(self, i + 1);
            }
        }
        bits[i] = -1;
    };
    search(search, 0);

    std::sort(found.begin(), found.end(),
              [](const ProbabilityState &a, const ProbabilityState &b) {
                  for (std::size_t i = 0; i < a.values.size(); ++i) {
                      const double x = a.values[i].value();
                      const double y = b.values[i].value();
                      if (x != y) {
                          return x < y;
                      }
                  }
                  return false;
              });
    result.states = std::move(found);
    return result;
}

// --- Born oracles -----------------------------------------------------------

double born_trace(const DensityOperator &rho, const Projector &p) {
    if (rho.dim() != p.dim()) {
        throw DimensionMismatchError("density matrix and projector dimensions "
                                     "differ");
    }
    double value = (rho.matrix() * p.matrix()).trace().real();
    if (value < 0.0 && value > -kEpsilon) {
        value = 0.0;
    }
    if (value > 1.0 && value < 1.0 + kEpsilon) {
        value = 1.0;
    }
    return value;
}

double born_overlap(const Ket &phi, const Ket &psi) {
    if (phi.dim() != psi.dim()) {
        throw DimensionMismatchError("kets have different dimensions");
    }
    const double n_phi = phi.components().squaredNorm();
    const double n_psi = psi.components().squaredNorm();
    if (std::sqrt(n_phi) <= kEpsilon || std::sqrt(n_psi) <= kEpsilon) {
        throw ZeroVectorError("overlap of a zero vector is undefined");
    }
    const Complex inner = phi.components().dot(psi.components());
    return std::norm(inner) / (n_phi * n_psi);
}

bool gleason_additivity_check(const DensityOperator &rho, const Context &c) {
    if (rho.dim() != c.dim()) {
        throw DimensionMismatchError(
            "density matrix and context dimensions differ");
    }
    double sum = 0.0;
    for (const auto &p : c.projectors()) {
        const double term = born_trace(rho, p);
        if (term < -kEpsilon || term > 1.0 + kEpsilon) {
            return false;
        }
        sum += term;
    }
    return near(sum, 1.0);
}

// --- events on partial logics ----------------------------------------------

EventClass classify_event(const PartialLogic &structure, ElementId preparation,
                          ElementId target) {
    structure.check_element(preparation);
    structure.check_element(target);
    if (!structure.is_atom(preparation)) {
        throw PreparationNotAtomError("preparation " +
                                      std::to_string(preparation) +
                                      " is not an atom");
    }
    if (subspace_leq(structure.subspace(preparation),
                     structure.subspace(target))) {
        return EventClass::Certain;
    }
    if (!structure.meet_defined(preparation, target)) {
        return EventClass::Indeterminate;
    }
    const ElementId met = structure.meet_within(preparation, target);
    if (met == Lattice::kBottom) {
        return EventClass::Impossible;
    }
    // An atom meets any block companion in either itself (handled by the
    // containment branch) or bottom.
    throw QLogicError("unexpected meet for an atomic preparation");
}

EventClass classify_event_intersection(const PartialLogic &structure,
                                       ElementId preparation, ElementId a,
                                       ElementId b) {
    if (!structure.meet_defined(a, b)) {
        throw QLogicError("targets share no block; their intersection is not "
                          "an element");
    }
    return classify_event(structure, preparation,
                          structure.meet_within(a, b));
}

EventClass classify_event_union(const PartialLogic &structure,
                                ElementId preparation, ElementId a,
                                ElementId b) {
    if (!structure.meet_defined(a, b)) {
        throw QLogicError("targets share no block; their union is not an "
                          "element");
    }
    return classify_event(structure, preparation,
                          structure.join_within(a, b));
}

namespace {

/// Shared scaffolding of the indifference assignment and the symmetric-state
/// enumeration: classification-forced values plus per-foreign-block uniform
/// atom values.
std::optional<ProbabilityState>
build_symmetric_state(const PartialLogic &structure, ElementId preparation,
                      const std::vector<Fraction> &block_atom_value,
                      const std::string &structure_id) {
    std::vector<std::optional<Fraction>> values(structure.size());
    values[Lattice::kBottom] = Fraction(0, 1);
    values[Lattice::kTop] = Fraction(1, 1);

    auto assign = [&](ElementId e, Fraction f) {
        if (values[e].has_value()) {
            return *values[e] == f;
        }
        values[e] = f;
        return true;
    };

    for (ElementId e = 0; e < structure.size(); ++e) {
        const EventClass cls = classify_event(structure, preparation, e);
        if (cls == EventClass::Certain) {
            if (!assign(e, Fraction(1, 1))) {
                return std::nullopt;
            }
        } else if (cls == EventClass::Impossible) {
            if (!assign(e, Fraction(0, 1))) {
                return std::nullopt;
            }
        }
    }
    for (std::size_t b = 0; b < structure.block_count(); ++b) {
        const auto &membership = structure.blocks_of(preparation);
        if (std::find(membership.begin(), membership.end(), b) !=
            membership.end()) {
            continue; // home block is fully classified
        }
        const Lattice &block = structure.block_lattice(b);
        const auto &ids = structure.blocks()[b];
        const auto block_atoms = block.atoms();
        for (ElementId local = 0; local < block.size(); ++local) {
            const ElementId global = ids[local];
            if (values[global].has_value()) {
                continue;
            }
            Fraction total(0, 1);
            for (ElementId atom : block_atoms) {
                if (block.leq(atom, local)) {
                    total = total + block_atom_value[b];
                }
            }
            if (!assign(global, total)) {
                return std::nullopt;
            }
        }
    }

    ProbabilityState state;
    state.structure_id = structure_id;
    state.values.reserve(structure.size());
    for (const auto &v : values) {
        if (!v.has_value()) {
            return std::nullopt;
        }
        state.values.push_back(StateValue::rational(*v));
    }
    if (!validate_state(structure, state)) {
        return std::nullopt;
    }
    return state;
}

} // namespace

ProbabilityState indifference_state(const PartialLogic &structure,
                                    ElementId preparation,
                                    std::string structure_id) {
    structure.check_element(preparation);
    if (!structure.is_atom(preparation)) {
        throw PreparationNotAtomError("preparation " +
                                      std::to_string(preparation) +
                                      " is not an atom");
    }
    std::vector<Fraction> uniform;
    uniform.reserve(structure.block_count());
    for (std::size_t b = 0; b < structure.block_count(); ++b) {
        const auto k = structure.block_lattice(b).atoms().size();
        uniform.emplace_back(1, static_cast<std::int64_t>(k));
    }
    auto state =
        build_symmetric_state(structure, preparation, uniform, structure_id);
    if (!state.has_value()) {
        throw QLogicError(
            "indifference assignment is not additive on this structure");
    }
    return *state;
}

std::vector<ProbabilityState>
symmetric_partial_states(const PartialLogic &structure, ElementId preparation,
                         bool zero_one_only, std::string structure_id) {
    structure.check_element(preparation);
    if (!structure.is_atom(preparation)) {
        throw PreparationNotAtomError("preparation " +
                                      std::to_string(preparation) +
                                      " is not an atom");
    }

    // Candidate symmetric value per foreign block: the block's k atoms share
    // one value x constrained by the unit context sum k*x = 1.
    const auto &home = structure.blocks_of(preparation);
    std::vector<std::vector<Fraction>> candidates(structure.block_count());
    for (std::size_t b = 0; b < structure.block_count(); ++b) {
        if (std::find(home.begin(), home.end(), b) != home.end()) {
            candidates[b] = {Fraction(0, 1)}; // unused for the home block
            continue;
        }
        const auto k = static_cast<std::int64_t>(
            structure.block_lattice(b).atoms().size());
        const std::vector<Fraction> domain =
            zero_one_only ? std::vector<Fraction>{Fraction(0, 1),
                                                  Fraction(1, 1)}
                          : std::vector<Fraction>{Fraction(1, k)};
        for (const Fraction &x : domain) {
            if (Fraction(x.num() * k, x.den()) == Fraction(1, 1)) {
                candidates[b].push_back(x);
            }
        }
        if (candidates[b].empty()) {
            return {};
        }
    }

    std::vector<ProbabilityState> result;
    std::vector<Fraction> chosen(structure.block_count(), Fraction(0, 1));
    auto expand = [&](auto &&self, std::size_t b) -> void {
        if (b == structure.block_count()) {
            auto state = build_symmetric_state(structure, preparation, chosen,
                                               structure_id);
            if (state.has_value()) {
                result.push_back(std::move(*state));
            }
            return;
        }
        for (const Fraction &x : candidates[b]) {
            chosen[b] = x;
            self(self, b + 1);
        }
    };
    expand(expand, 0);
    return result;
}

} // namespace qlogic
