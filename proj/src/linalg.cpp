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

#include "qlogic/linalg.hpp"

#include <cmath>
#include <utility>

namespace qlogic {

namespace {

bool all_finite(const Matrix &m) {
    return m.allFinite();
}

void require_same_dim(Eigen::Index a, Eigen::Index b) {
    if (a != b) {
        throw DimensionMismatchError("operands have dimensions " +
                                     std::to_string(a) + " and " +
                                     std::to_string(b));
    }
}

/// Projector onto the span of the eigenvectors of a Hermitian matrix whose
/// eigenvalues satisfy the predicate.
template <class Pred>
Matrix eigenspace_projector(const Matrix &hermitian, Pred keep) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(hermitian);
    const auto &values = solver.eigenvalues();
    const auto &vectors = solver.eigenvectors();
    Matrix result = Matrix::Zero(hermitian.rows(), hermitian.cols());
    for (Eigen::Index i = 0; i < values.size(); ++i) {
        if (keep(values(i))) {
            result += vectors.col(i) * vectors.col(i).adjoint();
        }
    }
    return result;
}

/// Snap a numerically reconstructed projector to an exact trivial element
/// when it is within tolerance; keeps catalog arithmetic bit-stable.
Matrix snap_trivial(Matrix m) {
    const Eigen::Index d = m.rows();
    if (m.norm() < kEpsilon) {
        return Matrix::Zero(d, d);
    }
    if ((m - Matrix::Identity(d, d)).norm() < kEpsilon) {
        return Matrix::Identity(d, d);
    }
    return m;
}

} // namespace

Ket::Ket(Vector components) : components_(std::move(components)) {
    if (components_.size() == 0) {
        throw QLogicError("ket must have positive dimension");
    }
    if (!components_.allFinite()) {
        throw QLogicError("ket components must be finite");
    }
}

Ket::Ket(std::initializer_list<Complex> components)
    : Ket(Eigen::Map<const Vector>(std::data(components),
                                   static_cast<Eigen::Index>(
                                       components.size()))) {}

Ket Ket::basis(Eigen::Index dim, Eigen::Index k) {
    if (dim <= 0 || k < 0 || k >= dim) {
        throw QLogicError("basis index out of range");
    }
    Vector v = Vector::Zero(dim);
    v(k) = Complex(1.0, 0.0);
    return Ket(v);
}

Projector::Projector(Matrix matrix) : matrix_(std::move(matrix)), rank_(0) {
    if (matrix_.rows() == 0 || matrix_.rows() != matrix_.cols()) {
        throw ValidationError("projector matrix must be square and nonempty");
    }
    if (!all_finite(matrix_)) {
        throw ValidationError("projector matrix must be finite");
    }
    if ((matrix_ - matrix_.adjoint()).norm() >= kEpsilon) {
        throw ValidationError("matrix is not Hermitian within tolerance");
    }
    if ((matrix_ * matrix_ - matrix_).norm() >= kEpsilon) {
        throw ValidationError("matrix is not idempotent within tolerance");
    }
    Eigen::SelfAdjointEigenSolver<Matrix> solver(matrix_);
    for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
        if (solver.eigenvalues()(i) > 0.5) {
            ++rank_;
        }
    }
}

Projector Projector::zero(Eigen::Index dim) {
    return Projector(Matrix::Zero(dim, dim));
}

Projector Projector::identity(Eigen::Index dim) {
    return Projector(Matrix::Identity(dim, dim));
}

bool Projector::approx_equal(const Projector &other) const {
    return dim() == other.dim() &&
           (matrix_ - other.matrix_).norm() < kEpsilon;
}

bool Projector::orthogonal_to(const Projector &other) const {
    require_same_dim(dim(), other.dim());
    return (matrix_ * other.matrix_).norm() < kEpsilon &&
           (other.matrix_ * matrix_).norm() < kEpsilon;
}

bool is_projector(const Matrix &matrix) {
    if (matrix.rows() == 0 || matrix.rows() != matrix.cols() ||
        !all_finite(matrix)) {
        return false;
    }
    return (matrix - matrix.adjoint()).norm() < kEpsilon &&
           (matrix * matrix - matrix).norm() < kEpsilon;
}

Projector projector_from_ket(const Ket &psi) {
    const double n2 = psi.components().squaredNorm();
    if (std::sqrt(n2) <= kEpsilon) {
        throw ZeroVectorError("cannot build a projector from a zero vector");
    }
    Matrix m = psi.components() * psi.components().adjoint() / n2;
    return Projector(std::move(m));
}

Subspace::Subspace(Projector projector) : projector_(std::move(projector)) {}

Subspace Subspace::zero(Eigen::Index dim) {
    return Subspace(Projector::zero(dim));
}

Subspace Subspace::full(Eigen::Index dim) {
    return Subspace(Projector::identity(dim));
}

Subspace Subspace::span(const Ket &psi) {
    return Subspace(projector_from_ket(psi));
}

Subspace meet_subspace(const Subspace &a, const Subspace &b) {
    require_same_dim(a.dim(), b.dim());
    const Eigen::Index d = a.dim();
    // v lies in both ranges iff (I - P_a) v = 0 and (I - P_b) v = 0, i.e.
    // iff v is an eigenvalue-0 vector of the PSD matrix 2I - P_a - P_b.
    Matrix gap = 2.0 * Matrix::Identity(d, d) - a.matrix() - b.matrix();
    Matrix m = eigenspace_projector(
        gap, [](double lambda) { return std::abs(lambda) < kEpsilon; });
    return Subspace(Projector(snap_trivial(std::move(m))));
}

Subspace join_subspace(const Subspace &a, const Subspace &b) {
    require_same_dim(a.dim(), b.dim());
    Matrix sum = a.matrix() + b.matrix();
    if ((sum * sum - sum).norm() < kEpsilon) {
        // Orthogonal (or nested-trivially) inputs: the sum is already the
        // projector onto the span.
        return Subspace(Projector(snap_trivial(std::move(sum))));
    }
    Matrix m = eigenspace_projector(
        sum, [](double lambda) { return lambda > kEpsilon; });
    return Subspace(Projector(snap_trivial(std::move(m))));
}

Subspace ortho_complement(const Subspace &a) {
    const Eigen::Index d = a.dim();
    return Subspace(Projector(Matrix(Matrix::Identity(d, d) - a.matrix())));
}

bool subspace_leq(const Subspace &a, const Subspace &b) {
    require_same_dim(a.dim(), b.dim());
    return (b.matrix() * a.matrix() - a.matrix()).norm() < kEpsilon;
}

bool is_invariant(const Subspace &h, const Projector &p) {
    require_same_dim(h.dim(), p.dim());
    Matrix mapped = p.matrix() * h.matrix();
    return (h.matrix() * mapped - mapped).norm() < kEpsilon;
}

Ket ray_vector(const Subspace &s) {
    if (s.rank() != 1) {
        throw QLogicError("ray vector requires a rank-1 subspace, got rank " +
                          std::to_string(s.rank()));
    }
    Eigen::SelfAdjointEigenSolver<Matrix> solver(s.matrix());
    Eigen::Index top_index = 0;
    solver.eigenvalues().maxCoeff(&top_index);
    return Ket(solver.eigenvectors().col(top_index));
}

} // namespace qlogic
