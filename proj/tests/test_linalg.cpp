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

#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "qlogic/linalg.hpp"

using namespace qlogic;
using qlogic::testing::Rng;

namespace {

const Complex kI(0.0, 1.0);

bool frob_close(const Matrix &a, const Matrix &b) {
    return (a - b).norm() < kEpsilon;
}

Matrix matrix2(Complex a, Complex b, Complex c, Complex d) {
    Matrix m(2, 2);
    m << a, b, c, d;
    return m;
}

} // namespace

TEST_CASE("projector from ket reproduces hand-computed dyads") {
    CHECK(frob_close(projector_from_ket(Ket{1, 0}).matrix(),
                     matrix2(1, 0, 0, 0)));
    CHECK(frob_close(projector_from_ket(Ket{1, 1}).matrix(),
                     0.5 * matrix2(1, 1, 1, 1)));
    CHECK(frob_close(projector_from_ket(Ket{1, kI}).matrix(),
                     0.5 * matrix2(1, -kI, kI, 1)));
    CHECK(projector_from_ket(Ket{1, 1}).rank() == 1);
}

TEST_CASE("projector from the zero vector is rejected") {
    CHECK_THROWS_AS(projector_from_ket(Ket{0, 0}), ZeroVectorError);
}

TEST_CASE("kets must be finite") {
    Vector v(2);
    v << Complex(std::numeric_limits<double>::quiet_NaN(), 0), Complex(1, 0);
    CHECK_THROWS_AS(Ket(v), QLogicError);
}

TEST_CASE("projector construction enforces the defining laws") {
    CHECK_THROWS_AS(Projector(matrix2(0, 1, 0, 0)), ValidationError);
    CHECK_THROWS_AS(Projector(matrix2(0.5, 0, 0, 0.5)), ValidationError);
    CHECK(Projector::zero(2).rank() == 0);
    CHECK(Projector::identity(2).rank() == 2);
    CHECK(is_projector(matrix2(1, 0, 0, 0)));
    CHECK_FALSE(is_projector(matrix2(0.3, 0, 0, 0.7)));
}

TEST_CASE("meet of distinct rays is the zero subspace") {
    const Subspace a = Subspace::span(Ket{1, 1});
    const Subspace b = Subspace::span(Ket{1, -1});
    CHECK(meet_subspace(a, b) == Subspace::zero(2));
}

TEST_CASE("meet is idempotent and has the full space as unit") {
    const Subspace a = Subspace::span(Ket{1, kI});
    CHECK(meet_subspace(a, a) == a);
    CHECK(meet_subspace(Subspace::full(2), Subspace::span(Ket{1, 0})) ==
          Subspace::span(Ket{1, 0}));
}

TEST_CASE("join spans the union") {
    CHECK(join_subspace(Subspace::span(Ket{1, 0}), Subspace::span(Ket{0, 1})) ==
          Subspace::full(2));
    const Subspace a = Subspace::span(Ket{1, 1});
    CHECK(join_subspace(a, Subspace::zero(2)) == a);
    CHECK(join_subspace(a, Subspace::span(Ket{1, 0})) == Subspace::full(2));
}

TEST_CASE("join of orthogonal subspaces equals the projector sum") {
    const Subspace a = Subspace::span(Ket{1, 1});
    const Subspace b = Subspace::span(Ket{1, -1});
    CHECK(frob_close(join_subspace(a, b).matrix(), a.matrix() + b.matrix()));
}

TEST_CASE("orthocomplement flips a subspace") {
    CHECK(ortho_complement(Subspace::zero(2)) == Subspace::full(2));
    CHECK(ortho_complement(Subspace::span(Ket{1, 0})) ==
          Subspace::span(Ket{0, 1}));
    CHECK(ortho_complement(Subspace::span(Ket{1, 1})) ==
          Subspace::span(Ket{1, -1}));
}

TEST_CASE("containment order") {
    const Subspace bottom = Subspace::zero(2);
    const Subspace top = Subspace::full(2);
    const Subspace line = Subspace::span(Ket{1, 0});
    CHECK(subspace_leq(bottom, line));
    CHECK(subspace_leq(bottom, top));
    CHECK(subspace_leq(line, top));
    CHECK_FALSE(subspace_leq(Subspace::span(Ket{1, 1}), line));
    CHECK_FALSE(subspace_leq(top, line));
}

TEST_CASE("invariance under a projector") {
    const Projector p(matrix2(1, 0, 0, 0));
    CHECK(is_invariant(Subspace::span(Ket{1, 0}), p));
    CHECK_FALSE(is_invariant(Subspace::span(Ket{1, 1}), p));
    CHECK(is_invariant(Subspace::zero(2), p));
    CHECK(is_invariant(Subspace::full(2), p));
}

TEST_CASE("dimension mismatches are rejected") {
    const Subspace a = Subspace::span(Ket{1, 0});
    const Subspace b = Subspace::span(Ket{1, 0, 0});
    CHECK_THROWS_AS(meet_subspace(a, b), DimensionMismatchError);
    CHECK_THROWS_AS(join_subspace(a, b), DimensionMismatchError);
    CHECK_THROWS_AS(subspace_leq(a, b), DimensionMismatchError);
    CHECK_THROWS_AS(is_invariant(a, b.projector()), DimensionMismatchError);
}

TEST_CASE("ray vector spans its subspace") {
    const Subspace s = Subspace::span(Ket{1, kI});
    const Ket psi = ray_vector(s);
    CHECK(frob_close(projector_from_ket(psi).matrix(), s.matrix()));
    CHECK_THROWS_AS(ray_vector(Subspace::full(2)), QLogicError);
}

TEST_CASE("subspace operations satisfy the lattice laws on random input") {
    Rng rng(20260809);
    for (const Eigen::Index dim : {Eigen::Index(2), Eigen::Index(3)}) {
        for (int trial = 0; trial < 200; ++trial) {
            const Subspace a = testing::random_subspace_any_rank(rng, dim);
            const Subspace b = testing::random_subspace_any_rank(rng, dim);
            const Subspace m = meet_subspace(a, b);
            const Subspace j = join_subspace(a, b);

            // Every produced projector satisfies the projector laws.
            for (const Subspace *s : {&m, &j}) {
                const Matrix &p = s->matrix();
                REQUIRE((p - p.adjoint()).norm() < kEpsilon);
                REQUIRE((p * p - p).norm() < kEpsilon);
            }

            REQUIRE(m == meet_subspace(b, a));
            REQUIRE(j == join_subspace(b, a));
            REQUIRE(meet_subspace(a, a) == a);
            REQUIRE(join_subspace(a, a) == a);
            REQUIRE(subspace_leq(m, a));
            REQUIRE(subspace_leq(a, j));

            // Absorption.
            REQUIRE(meet_subspace(a, j) == a);
            REQUIRE(join_subspace(a, m) == a);

            // De Morgan.
            REQUIRE(ortho_complement(m) ==
                    join_subspace(ortho_complement(a), ortho_complement(b)));

            // Double complement.
            REQUIRE(ortho_complement(ortho_complement(a)) == a);

            // Independent null-space oracle for the meet.
            REQUIRE(m == testing::meet_oracle(a, b));
        }
    }
}

TEST_CASE("distinct random lines in the plane meet at zero and span it") {
    Rng rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        const Subspace a = testing::random_subspace(rng, 2, 1);
        const Subspace b = testing::random_subspace(rng, 2, 1);
        if (a == b) {
            continue;
        }
        const int meet_rank = meet_subspace(a, b).rank();
        const int join_rank = join_subspace(a, b).rank();
        REQUIRE(meet_rank == 0);
        REQUIRE(join_rank == 2);
        REQUIRE(meet_rank + join_rank >= a.rank() + b.rank());
    }
}
