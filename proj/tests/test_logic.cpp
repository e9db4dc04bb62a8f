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
#include "qlogic/context.hpp"
#include "qlogic/lattice.hpp"
#include "qlogic/pasting.hpp"

using namespace qlogic;

namespace {

const Complex kI(0.0, 1.0);

std::vector<Subspace> six_rays() {
    return {
        Subspace::span(Ket{1, 1}),  Subspace::span(Ket{1, -1}),
        Subspace::span(Ket{1, kI}), Subspace::span(Ket{kI, 1}),
        Subspace::span(Ket{1, 0}),  Subspace::span(Ket{0, 1}),
    };
}

Lattice ray_block(const Ket &up) {
    const Subspace ray = Subspace::span(up);
    return closure_lattice(2, std::vector<Subspace>{ray,
                                                    ortho_complement(ray)});
}

/// The hexagon: two 4-chains 0 < a < b < 1 and 0 < c < d < 1 with the
/// order-reversing complement a<->d, b<->c. A lattice with a legitimate
/// orthocomplement that fails the orthomodular law.
Lattice hexagon() {
    const ElementId O = 0, I = 1, a = 2, b = 3, c = 4, d = 5;
    std::vector<std::vector<ElementId>> meet(6, std::vector<ElementId>(6, O));
    std::vector<std::vector<ElementId>> join(6, std::vector<ElementId>(6, I));
    auto chain = [&](ElementId lo, ElementId hi) {
        meet[lo][lo] = lo;
        meet[hi][hi] = hi;
        meet[lo][hi] = meet[hi][lo] = lo;
        join[lo][lo] = lo;
        join[hi][hi] = hi;
        join[lo][hi] = join[hi][lo] = hi;
    };
    chain(a, b);
    chain(c, d);
    for (ElementId e = 0; e < 6; ++e) {
        meet[O][e] = meet[e][O] = O;
        meet[I][e] = meet[e][I] = e;
        join[O][e] = join[e][O] = e;
        join[I][e] = join[e][I] = I;
    }
    return Lattice(6, meet, join, {I, O, d, c, b, a});
}

} // namespace

TEST_CASE("context validation accepts the standard basis pair") {
    CHECK_NOTHROW(make_context({projector_from_ket(Ket{1, 0}),
                                projector_from_ket(Ket{0, 1})}));
}

TEST_CASE("context validation rejects the defining violations") {
    const Projector z = projector_from_ket(Ket{1, 0});
    CHECK_THROWS_AS(make_context({z, z}), NotOrthogonalError);
    CHECK_THROWS_AS(make_context({z}), IncompleteSumError);
    CHECK_THROWS_AS(make_context({Projector::zero(2), Projector::identity(2)}),
                    TrivialMemberError);
    CHECK_THROWS_AS(make_context({}), IncompleteSumError);
}

TEST_CASE("closure of the six rays has exactly eight elements") {
    const auto rays = six_rays();
    const Lattice lattice = closure_lattice(2, rays);
    CHECK(lattice.size() == 8);
    for (const auto &ray : rays) {
        CHECK(lattice.find(ray) != kNoElement);
    }
    CHECK(lattice.subspace(Lattice::kBottom) == Subspace::zero(2));
    CHECK(lattice.subspace(Lattice::kTop) == Subspace::full(2));
}

TEST_CASE("closure of a basis pair is the four-element Boolean lattice") {
    const Lattice lattice = closure_lattice(
        2, std::vector<Subspace>{Subspace::span(Ket{1, 0}),
                                 Subspace::span(Ket{0, 1})});
    CHECK(lattice.size() == 4);
    CHECK(is_boolean(lattice));
}

TEST_CASE("closure of nothing is the two-element lattice") {
    const Lattice lattice = closure_lattice(2, std::vector<Subspace>{});
    CHECK(lattice.size() == 2);
    CHECK(is_boolean(lattice));
}

TEST_CASE("closure output is closed under meet and join") {
    const Lattice lattice = closure_lattice(2, six_rays());
    for (ElementId a = 0; a < lattice.size(); ++a) {
        for (ElementId b = 0; b < lattice.size(); ++b) {
            CHECK(lattice.find(meet_subspace(lattice.subspace(a),
                                             lattice.subspace(b))) !=
                  kNoElement);
            CHECK(lattice.find(join_subspace(lattice.subspace(a),
                                             lattice.subspace(b))) !=
                  kNoElement);
        }
    }
}

TEST_CASE("closure growth past the cap reports overflow") {
    // Generic lines in dimension 3 generate an infinite modular lattice.
    testing::Rng rng(11);
    std::vector<Subspace> lines;
    for (int k = 0; k < 4; ++k) {
        lines.push_back(testing::random_subspace(rng, 3, 1));
    }
    CHECK_THROWS_AS(closure_lattice(3, lines, 40), ClosureOverflowError);
}

TEST_CASE("the eight-element ray lattice is orthomodular but not Boolean") {
    const Lattice lattice = closure_lattice(2, six_rays());
    CHECK(lattice.has_complements());
    CHECK(check_orthomodular(lattice));
    CHECK_FALSE(is_boolean(lattice));
}

TEST_CASE("every four-element block is Boolean and orthomodular") {
    for (const Ket &up : {Ket{1, 1}, Ket{1, kI}, Ket{1, 0}}) {
        const Lattice block = ray_block(up);
        CHECK(block.size() == 4);
        CHECK(is_boolean(block));
        CHECK(check_orthomodular(block));
    }
}

TEST_CASE("the hexagon fails the orthomodular law") {
    const Lattice o6 = hexagon();
    CHECK(o6.size() == 6);
    CHECK(o6.has_complements());
    CHECK_FALSE(check_orthomodular(o6));
    CHECK_FALSE(is_boolean(o6));
}

TEST_CASE("abstract tables are validated") {
    // A meet entry that is not the greatest lower bound.
    std::vector<std::vector<ElementId>> meet{{0, 0}, {0, 0}};
    std::vector<std::vector<ElementId>> join{{0, 1}, {1, 1}};
    CHECK_THROWS_AS(Lattice(2, meet, join), ValidationError);

    std::vector<std::vector<ElementId>> good_meet{{0, 0}, {0, 1}};
    std::vector<std::vector<ElementId>> good_join{{0, 1}, {1, 1}};
    CHECK_NOTHROW(Lattice(2, good_meet, good_join));
    CHECK_THROWS_AS(Lattice(2, good_meet, good_join, {0, 1}),
                    ValidationError);
}

TEST_CASE("pasting the three ray blocks rebuilds the eight-element lattice") {
    const std::vector<Lattice> blocks{ray_block(Ket{1, 1}),
                                      ray_block(Ket{1, kI}),
                                      ray_block(Ket{1, 0})};
    const PastedLogic pasted = paste_blocks(blocks);
    CHECK(pasted.size() == 8);
    CHECK(pasted.blocks().size() == 3);

    const Lattice direct = closure_lattice(2, six_rays());
    REQUIRE(pasted.size() == direct.size());
    for (ElementId e = 0; e < direct.size(); ++e) {
        CHECK(pasted.lattice().find(direct.subspace(e)) != kNoElement);
    }

    // Cross-block nontrivial pairs meet at bottom and join at top.
    const Lattice &lattice = pasted.lattice();
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            if (i == j) {
                continue;
            }
            for (ElementId a : pasted.blocks()[i]) {
                for (ElementId b : pasted.blocks()[j]) {
                    if (a < 2 || b < 2 || a == b) {
                        continue;
                    }
                    CHECK(lattice.meet(a, b) == Lattice::kBottom);
                    CHECK(lattice.join(a, b) == Lattice::kTop);
                }
            }
        }
    }

    // Restricting the pasted tables to a block reproduces the block.
    for (std::size_t i = 0; i < 3; ++i) {
        const Lattice &block = blocks[i];
        const auto &ids = pasted.blocks()[i];
        for (ElementId x = 0; x < block.size(); ++x) {
            for (ElementId y = 0; y < block.size(); ++y) {
                CHECK(ids[block.meet(x, y)] == lattice.meet(ids[x], ids[y]));
                CHECK(ids[block.join(x, y)] == lattice.join(ids[x], ids[y]));
            }
        }
    }
}

TEST_CASE("pasting one block changes nothing") {
    const Lattice block = ray_block(Ket{1, 0});
    const PastedLogic pasted = paste_blocks({block});
    CHECK(pasted.size() == block.size());
    CHECK(pasted.blocks().size() == 1);
}

TEST_CASE("pasting duplicate blocks deduplicates them") {
    const Lattice block = ray_block(Ket{1, 0});
    const PastedLogic pasted = paste_blocks({block, block});
    CHECK(pasted.size() == block.size());
    CHECK(pasted.blocks().size() == 1);
}

TEST_CASE("pasting a non-Boolean block is rejected") {
    const Lattice msigma = closure_lattice(2, six_rays());
    CHECK_THROWS_AS(paste_blocks({msigma}), BlockNotBooleanError);
}

TEST_CASE("pasting blocks with different trivials is rejected") {
    const Lattice block2 = ray_block(Ket{1, 0});
    const Lattice block3 = closure_lattice(
        3, std::vector<Subspace>{Subspace::span(Ket{1, 0, 0}),
                                 Subspace::span(Ket{0, 1, 0}),
                                 Subspace::span(Ket{0, 0, 1})});
    CHECK_THROWS_AS(paste_blocks({block2, block3}),
                    IncompatibleTrivialsError);
    CHECK_THROWS_AS(partial_logic({block2, block3}),
                    IncompatibleTrivialsError);
}

TEST_CASE("the partial logic keeps cross-block meets undefined") {
    const PartialLogic partial = partial_logic({ray_block(Ket{1, 1}),
                                                ray_block(Ket{1, kI}),
                                                ray_block(Ket{1, 0})});
    CHECK(partial.size() == 8);
    CHECK(partial.block_count() == 3);
    CHECK(partial.atoms().size() == 6);

    // Within one block the meet is defined; across blocks it is not; the
    // trivial elements are shared by all blocks.
    const auto &blocks = partial.blocks();
    CHECK(partial.meet_defined(blocks[2][2], blocks[2][3]));
    CHECK_FALSE(partial.meet_defined(blocks[2][2], blocks[0][2]));
    for (ElementId e = 0; e < partial.size(); ++e) {
        CHECK(partial.meet_defined(Lattice::kBottom, e));
        CHECK(partial.meet_defined(Lattice::kTop, e));
    }

    std::size_t undefined = 0;
    for (ElementId a = 0; a < partial.size(); ++a) {
        for (ElementId b = 0; b < partial.size(); ++b) {
            if (!partial.meet_defined(a, b)) {
                ++undefined;
            }
        }
    }
    CHECK(undefined == 24);

    CHECK_THROWS_AS(partial.meet_defined(99, 0), UnknownElementError);
    CHECK_THROWS_AS(partial.meet_within(blocks[2][2], blocks[0][2]),
                    QLogicError);
}

TEST_CASE("a single-block partial logic behaves like its lattice") {
    const Lattice block = ray_block(Ket{1, 0});
    const PartialLogic partial = partial_logic({block});
    CHECK(partial.size() == block.size());
    for (ElementId a = 0; a < block.size(); ++a) {
        for (ElementId b = 0; b < block.size(); ++b) {
            REQUIRE(partial.meet_defined(a, b));
            CHECK(partial.meet_within(a, b) == block.meet(a, b));
            CHECK(partial.join_within(a, b) == block.join(a, b));
        }
    }
}

TEST_CASE("atom detection on the pasted and partial structures") {
    const Lattice lattice = closure_lattice(2, six_rays());
    const auto atoms = lattice.atoms();
    CHECK(atoms.size() == 6);
    for (ElementId a : atoms) {
        CHECK(lattice.subspace(a).rank() == 1);
    }
    CHECK(lattice.contexts().size() == 3);
}
