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

#include "qlogic/qubit.hpp"

namespace qlogic {

namespace {

Matrix pauli(int axis) {
    Matrix m(2, 2);
    switch (axis) {
    case 1:
        m << 0, 1, 1, 0;
        break;
    case 2:
        m << 0, Complex(0, -1), Complex(0, 1), 0;
        break;
    case 3:
        m << 1, 0, 0, -1;
        break;
    default:
        throw InvalidLabelError("no Pauli matrix for axis " +
                                std::to_string(axis));
    }
    return m;
}

} // namespace

Projector axis_projector(int axis, int outcome) {
    if (outcome != 1 && outcome != 2) {
        throw InvalidLabelError("outcome must be 1 or 2, got " +
                                std::to_string(outcome));
    }
    if (axis == 0) {
        return outcome == 1 ? Projector::zero(2) : Projector::identity(2);
    }
    if (axis < 1 || axis > kQubitAxes) {
        throw InvalidLabelError("axis must be in 0..3, got " +
                                std::to_string(axis));
    }
    const double sign = (outcome == 1) ? 1.0 : -1.0;
    Matrix m = 0.5 * (Matrix::Identity(2, 2) + sign * pauli(axis));
    return Projector(std::move(m));
}

Ket axis_ray(int axis, int outcome) {
    if (outcome != 1 && outcome != 2) {
        throw InvalidLabelError("outcome must be 1 or 2, got " +
                                std::to_string(outcome));
    }
    const Complex i(0, 1);
    switch (axis) {
    case 1:
        return outcome == 1 ? Ket{1, 1} : Ket{1, -1};
    case 2:
        return outcome == 1 ? Ket{1, i} : Ket{i, 1};
    case 3:
        return outcome == 1 ? Ket{1, 0} : Ket{0, 1};
    default:
        throw InvalidLabelError("axis must be in 1..3, got " +
                                std::to_string(axis));
    }
}

std::vector<Context> qubit_contexts() {
    std::vector<Context> result;
    result.reserve(kQubitAxes);
    for (int axis = 1; axis <= kQubitAxes; ++axis) {
        result.emplace_back(
            "Sigma" + std::to_string(axis),
            std::vector<Projector>{axis_projector(axis, 1),
                                   axis_projector(axis, 2)});
    }
    return result;
}

Lattice qubit_sublattice() {
    std::vector<Subspace> rays;
    rays.reserve(2 * kQubitAxes);
    for (int axis = 1; axis <= kQubitAxes; ++axis) {
        rays.emplace_back(axis_projector(axis, 1));
        rays.emplace_back(axis_projector(axis, 2));
    }
    return closure_lattice(2, rays);
}

Lattice invariant_lattice(int axis) {
    if (axis < 1 || axis > kQubitAxes) {
        throw InvalidLabelError("axis must be in 1..3, got " +
                                std::to_string(axis));
    }
    const Projector up = axis_projector(axis, 1);
    const Projector down = axis_projector(axis, 2);
    const Lattice full = qubit_sublattice();
    std::vector<Subspace> invariant;
    for (ElementId e = 0; e < full.size(); ++e) {
        const Subspace &s = full.subspace(e);
        if (is_invariant(s, up) && is_invariant(s, down)) {
            invariant.push_back(s);
        }
    }
    return Lattice::from_subspaces(std::move(invariant));
}

PastedLogic qubit_pasting() {
    std::vector<Lattice> blocks;
    blocks.reserve(kQubitAxes);
    for (int axis = 1; axis <= kQubitAxes; ++axis) {
        blocks.push_back(invariant_lattice(axis));
    }
    return paste_blocks(blocks);
}

PartialLogic qubit_block_logic() {
    std::vector<Lattice> blocks;
    blocks.reserve(kQubitAxes);
    for (int axis = 1; axis <= kQubitAxes; ++axis) {
        blocks.push_back(invariant_lattice(axis));
    }
    return partial_logic(blocks);
}

} // namespace qlogic
