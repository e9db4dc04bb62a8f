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
 * Exact-tolerance complex linear algebra for small dimensions: kets,
 * projectors, and subspace arithmetic (meet, join, orthocomplement,
 * containment, invariance).
 *
 * A closed linear subspace is canonicalized as its orthogonal projector;
 * two subspaces are equal iff their projectors are within kEpsilon in
 * Frobenius norm. All types are immutable values after construction.
 */

#pragma once

#include <initializer_list>

#include "qlogic/core.hpp"

namespace qlogic {

/// A vector in a d-dimensional complex space. Entries must be finite;
/// physical-state requirements (nonzero norm) are enforced at the point of
/// use, so the zero vector itself is representable.
class Ket {
  public:
    explicit Ket(Vector components);
    Ket(std::initializer_list<Complex> components);

    /// k-th standard basis vector of the given dimension.
    static Ket basis(Eigen::Index dim, Eigen::Index k);

    Eigen::Index dim() const { return components_.size(); }
    const Vector &components() const { return components_; }
    double norm() const { return components_.norm(); }

  private:
    Vector components_;
};

/// Hermitian idempotent matrix. Construction verifies both properties within
/// kEpsilon and fixes the rank by counting eigenvalues above 1/2 (projector
/// eigenvalues cluster at 0 and 1).
class Projector {
  public:
    explicit Projector(Matrix matrix);

    static Projector zero(Eigen::Index dim);
    static Projector identity(Eigen::Index dim);

    Eigen::Index dim() const { return matrix_.rows(); }
    const Matrix &matrix() const { return matrix_; }
    int rank() const { return rank_; }

    bool is_zero() const { return rank_ == 0; }
    bool is_identity() const { return rank_ == dim(); }

    /// Frobenius-distance equality within kEpsilon.
    bool approx_equal(const Projector &other) const;

    /// Mutual annihilation: both products vanish within kEpsilon.
    bool orthogonal_to(const Projector &other) const;

  private:
    Matrix matrix_;
    int rank_;
};

/// True iff the matrix passes the Projector invariants (square, finite,
/// Hermitian, idempotent) without throwing.
bool is_projector(const Matrix &matrix);

/// Rank-1 projector |psi><psi| / <psi|psi>.
/// Throws ZeroVectorError when the norm is below tolerance.
Projector projector_from_ket(const Ket &psi);

/// A closed linear subspace, canonically represented by its orthogonal
/// projector. The rank is the subspace dimension.
class Subspace {
  public:
    explicit Subspace(Projector projector);

    static Subspace zero(Eigen::Index dim);
    static Subspace full(Eigen::Index dim);
    /// The ray spanned by a nonzero vector.
    static Subspace span(const Ket &psi);

    Eigen::Index dim() const { return projector_.dim(); }
    int rank() const { return projector_.rank(); }
    const Projector &projector() const { return projector_; }
    const Matrix &matrix() const { return projector_.matrix(); }

    bool is_zero() const { return projector_.is_zero(); }
    bool is_full() const { return projector_.is_identity(); }

    friend bool operator==(const Subspace &a, const Subspace &b) {
        return a.projector_.approx_equal(b.projector_);
    }

  private:
    Projector projector_;
};

/// Intersection of two subspaces, computed from the eigenvalue-zero space of
/// (2I - P_a - P_b).
Subspace meet_subspace(const Subspace &a, const Subspace &b);

/// Closed linear span of the union, computed from the range of (P_a + P_b).
/// For orthogonal inputs the result projector equals the sum of the input
/// projectors within kEpsilon.
Subspace join_subspace(const Subspace &a, const Subspace &b);

/// Orthogonal complement: projector I - P. Involutive.
Subspace ortho_complement(const Subspace &a);

/// Containment a <= b, decided by P_b P_a = P_a within kEpsilon.
bool subspace_leq(const Subspace &a, const Subspace &b);

/// True iff p maps h into itself: P_h p P_h = p P_h within kEpsilon.
bool is_invariant(const Subspace &h, const Projector &p);

/// A unit vector spanning a rank-1 subspace. Throws QLogicError when the
/// rank differs from 1.
Ket ray_vector(const Subspace &s);

} // namespace qlogic
