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

// Test-only utilities: seeded random generators for kets, subspaces,
// densities, and contexts, plus independent oracles (null-space meet,
// exhaustive dispersion-free search) that deliberately avoid the library's
// own computation paths.

#pragma once

#include <random>
#include <vector>

#include <Eigen/Dense>

#include "qlogic/lattice.hpp"
#include "qlogic/linalg.hpp"
#include "qlogic/states.hpp"

namespace qlogic::testing {

using Rng = std::mt19937_64;

inline Vector random_vector(Rng &rng, Eigen::Index dim) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Vector v(dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        v(i) = Complex(gauss(rng), gauss(rng));
    }
    return v;
}

inline Ket random_ket(Rng &rng, Eigen::Index dim) {
    Vector v = random_vector(rng, dim);
    while (v.norm() < 1e-6) {
        v = random_vector(rng, dim);
    }
    return Ket(v);
}

/// Haar-like random orthonormal basis from a QR factorization of a complex
/// Gaussian matrix.
inline std::vector<Vector> random_orthonormal_basis(Rng &rng,
                                                    Eigen::Index dim) {
    Matrix g(dim, dim);
    for (Eigen::Index r = 0; r < dim; ++r) {
        g.row(r) = random_vector(rng, dim).transpose();
    }
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ();
    std::vector<Vector> basis;
    basis.reserve(dim);
    for (Eigen::Index c = 0; c < dim; ++c) {
        basis.push_back(q.col(c));
    }
    return basis;
}

/// Random subspace of the given rank as a sum of orthonormal dyads.
inline Subspace random_subspace(Rng &rng, Eigen::Index dim, int rank) {
    const auto basis = random_orthonormal_basis(rng, dim);
    Matrix p = Matrix::Zero(dim, dim);
    for (int k = 0; k < rank; ++k) {
        p += basis[static_cast<std::size_t>(k)] *
             basis[static_cast<std::size_t>(k)].adjoint();
    }
    return Subspace(Projector(p));
}

inline Subspace random_subspace_any_rank(Rng &rng, Eigen::Index dim) {
    std::uniform_int_distribution<int> rank(0, static_cast<int>(dim));
    return random_subspace(rng, dim, rank(rng));
}

/// Random density operator: normalized Gram matrix of a Gaussian square
/// matrix (full rank, positive definite almost surely).
inline DensityOperator random_density(Rng &rng, Eigen::Index dim) {
    Matrix g(dim, dim);
    for (Eigen::Index r = 0; r < dim; ++r) {
        g.row(r) = random_vector(rng, dim).transpose();
    }
    Matrix gram = g * g.adjoint();
    gram /= gram.trace().real();
    return DensityOperator(std::move(gram));
}

/// Random context: the rank-1 projectors of a random orthonormal basis,
/// optionally merging two adjacent members into one rank-2 projector.
inline Context random_context(Rng &rng, Eigen::Index dim,
                              bool allow_multirank = true) {
    const auto basis = random_orthonormal_basis(rng, dim);
    std::vector<Projector> members;
    std::uniform_int_distribution<int> coin(0, 1);
    std::size_t i = 0;
    while (i < basis.size()) {
        if (allow_multirank && dim > 2 && i + 1 < basis.size() &&
            coin(rng) == 1) {
            Matrix p = basis[i] * basis[i].adjoint() +
                       basis[i + 1] * basis[i + 1].adjoint();
            members.emplace_back(std::move(p));
            i += 2;
        } else {
            Matrix p = basis[i] * basis[i].adjoint();
            members.emplace_back(std::move(p));
            i += 1;
        }
    }
    return make_context(std::move(members));
}

/// Independent meet oracle: the intersection is the null space of the
/// stacked system [(I - P_a); (I - P_b)], computed via SVD. This path shares
/// nothing with the library's eigenvalue-gap construction.
inline Subspace meet_oracle(const Subspace &a, const Subspace &b) {
    const Eigen::Index d = a.dim();
    Matrix stacked(2 * d, d);
    stacked.topRows(d) = Matrix::Identity(d, d) - a.matrix();
    stacked.bottomRows(d) = Matrix::Identity(d, d) - b.matrix();
    Eigen::JacobiSVD<Matrix> svd(stacked, Eigen::ComputeFullV);
    Matrix p = Matrix::Zero(d, d);
    for (Eigen::Index k = 0; k < d; ++k) {
        if (k >= svd.nonzeroSingularValues() ||
            svd.singularValues()(k) < 1e-7) {
            p += svd.matrixV().col(k) * svd.matrixV().col(k).adjoint();
        }
    }
    return Subspace(Projector(std::move(p)));
}

/// Exhaustive dispersion-free search: every {0,1} assignment over the atoms,
/// completed by direct subspace containment and filtered by the validator.
inline std::vector<std::vector<double>>
dispersion_free_bruteforce(const Lattice &lattice) {
    const auto atoms = lattice.atoms();
    std::vector<std::vector<double>> found;
    for (std::size_t mask = 0; mask < (1u << atoms.size()); ++mask) {
        std::vector<double> values(lattice.size(), 0.0);
        for (ElementId e = 1; e < lattice.size(); ++e) {
            for (std::size_t i = 0; i < atoms.size(); ++i) {
                if ((mask >> i & 1u) != 0 &&
                    subspace_leq(lattice.subspace(atoms[i]),
                                 lattice.subspace(e))) {
                    values[e] = 1.0;
                    break;
                }
            }
        }
        if (validate_state(lattice, values)) {
            found.push_back(std::move(values));
        }
    }
    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    return found;
}

} // namespace qlogic::testing
