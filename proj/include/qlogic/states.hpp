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
 * Probability measures on logic structures: validation against the
 * additivity and normalization axioms, exhaustive enumeration of
 * dispersion-free 0/1 measures, Born oracles (trace rule and overlap rule),
 * event classification on partial logics, and the indifference assignment.
 */

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qlogic/context.hpp"
#include "qlogic/pasting.hpp"

namespace qlogic {

/// Exact rational number with a canonical (reduced, positive-denominator)
/// representation. State values on the built-in catalog are all in
/// {0, 1/2, 1}, so tests can assert them bit-exactly.
class Fraction {
  public:
    Fraction() : num_(0), den_(1) {}
    Fraction(std::int64_t num, std::int64_t den);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    double to_double() const {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }
    /// "p" for integers, "p/q" otherwise.
    std::string str() const;

    friend Fraction operator+(const Fraction &a, const Fraction &b);
    friend bool operator==(const Fraction &a, const Fraction &b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

  private:
    std::int64_t num_;
    std::int64_t den_;
};

/// A probability value that is either an exact rational or a floating-point
/// number; the floating view is always available.
class StateValue {
  public:
    static StateValue rational(Fraction f);
    static StateValue decimal(double v);

    bool exact() const { return exact_; }
    double value() const { return value_; }
    const Fraction &fraction() const;
    /// "p/q" in exact mode, decimal text otherwise.
    std::string repr() const;

  private:
    StateValue() = default;
    bool exact_ = false;
    Fraction fraction_;
    double value_ = 0.0;
};

/// Assignment element-id -> [0, 1] over one logic structure.
struct ProbabilityState {
    std::string structure_id;
    std::vector<StateValue> values; // indexed by element id

    std::vector<double> as_doubles() const;
};

/// Positive semidefinite unit-trace matrix.
class DensityOperator {
  public:
    explicit DensityOperator(Matrix matrix);

    /// rho = |psi><psi| / <psi|psi>. Throws ZeroVectorError.
    static DensityOperator pure(const Ket &psi);
    static DensityOperator maximally_mixed(Eigen::Index dim);

    Eigen::Index dim() const { return matrix_.rows(); }
    const Matrix &matrix() const { return matrix_; }

  private:
    Matrix matrix_;
};

/// Truth status of an outcome event relative to a preparation.
enum class EventClass {
    Certain,       // the target contains the preparation
    Impossible,    // the meet with the preparation is defined and is bottom
    Indeterminate, // the meet with the preparation is undefined
};

std::string to_string(EventClass c);

// --- state validation ------------------------------------------------------

/// True iff the value map satisfies, within 1e-9: value(bottom) = 0,
/// value(top) = 1, unit sum over every context embedded in the lattice, and
/// additivity value(a v b) = value(a) + value(b) for orthogonal pairs.
/// Throws MissingElementError when the map does not cover every element.
bool validate_state(const Lattice &structure, const std::vector<double> &values);
bool validate_state(const Lattice &structure, const ProbabilityState &state);

/// Partial-logic variant: additivity and context sums are required only
/// within blocks, since cross-block joins are undefined.
bool validate_state(const PartialLogic &structure,
                    const std::vector<double> &values);
bool validate_state(const PartialLogic &structure,
                    const ProbabilityState &state);

// --- dispersion-free enumeration -------------------------------------------

struct EnumerationResult {
    std::vector<ProbabilityState> states;
    std::size_t atom_count = 0;
    std::size_t search_nodes = 0;
    std::string structure_id;
};

/// All value maps into {0, 1} passing validate_state, found by backtracking
/// over atoms with per-context exactly-one-true pruning. Non-atom values are
/// forced: an element is true iff it contains a true atom. The returned list
/// is sorted lexicographically by value vector, so the order is deterministic
/// regardless of search schedule.
EnumerationResult enumerate_dispersion_free(const Lattice &structure,
                                            std::string structure_id = "");

// --- Born oracles -----------------------------------------------------------

/// Trace rule Tr(rho p), clamped of roundoff to [0, 1].
double born_trace(const DensityOperator &rho, const Projector &p);

/// Squared overlap |<phi|psi>|^2 of the normalized vectors. Symmetric and
/// invariant under nonzero rescaling of either argument.
double born_overlap(const Ket &phi, const Ket &psi);

/// True iff the trace-rule values over the context members are each within
/// [0, 1] and sum to 1 within 1e-9.
bool gleason_additivity_check(const DensityOperator &rho, const Context &c);

// --- events on partial logics ----------------------------------------------

/// Classifies the outcome event for `target` when the system is prepared in
/// the atom `preparation`. Throws UnknownElementError or
/// PreparationNotAtomError.
EventClass classify_event(const PartialLogic &structure, ElementId preparation,
                          ElementId target);

/// Pair-level event facts for two targets sharing a block: the intersection
/// event is the meet within the block, the union event the join. For the two
/// atoms of a foreign context these yield Impossible and Certain even though
/// each atom alone is Indeterminate.
EventClass classify_event_intersection(const PartialLogic &structure,
                                       ElementId preparation, ElementId a,
                                       ElementId b);
EventClass classify_event_union(const PartialLogic &structure,
                                ElementId preparation, ElementId a,
                                ElementId b);

/// The indifference assignment for a preparation atom: 1 on every Certain
/// element, 0 on every Impossible element, and each foreign block's k atoms
/// share 1/k (non-atom block members collect the atoms below them).
ProbabilityState indifference_state(const PartialLogic &structure,
                                    ElementId preparation,
                                    std::string structure_id = "");

/// Enumerates the classification-consistent states on a partial logic that
/// are symmetric under permuting the atoms of each foreign block. With
/// `zero_one_only` the values must lie in {0, 1} and the family is empty
/// whenever some foreign block has two or more atoms; otherwise the family
/// is exactly the indifference state.
std::vector<ProbabilityState>
symmetric_partial_states(const PartialLogic &structure, ElementId preparation,
                         bool zero_one_only, std::string structure_id = "");

} // namespace qlogic
