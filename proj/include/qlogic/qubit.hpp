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
 * The built-in qubit catalog: spin projectors for the three measurement
 * axes, their contexts, the eight-element ray sublattice they generate, and
 * the four-element invariant-subspace lattice of each axis.
 */

#pragma once

#include "qlogic/context.hpp"
#include "qlogic/pasting.hpp"

namespace qlogic {

/// Number of measurement axes in the catalog.
inline constexpr int kQubitAxes = 3;

/// Projector onto the spin eigenspace of one measurement axis.
///
/// Axes 1, 2, 3 are the x, y, z Pauli axes; outcome 1 selects the +1
/// eigenspace and outcome 2 the -1 eigenspace. Axis 0 is the trivial
/// family: outcome 1 gives the zero projector, outcome 2 the identity.
/// Throws InvalidLabelError for labels outside {0..3} x {1,2}.
Projector axis_projector(int axis, int outcome);

/// The exact (integer-component) spin eigenvector for one axis and outcome:
/// (1,1) and (1,-1) for x, (1,i) and (i,1) for y, (1,0) and (0,1) for z.
/// Spanning it reproduces the range of axis_projector(axis, outcome); the
/// integer components keep Born overlaps between catalog rays exact in
/// double precision. Throws InvalidLabelError unless axis is in {1, 2, 3}.
Ket axis_ray(int axis, int outcome);

/// The three measurement contexts {axis_projector(q, 1), axis_projector(q, 2)}
/// for q in {1, 2, 3}, labeled "Sigma1".."Sigma3".
std::vector<Context> qubit_contexts();

/// The eight-element lattice generated by the six spin rays: bottom, top,
/// and one ray per (axis, outcome) pair.
Lattice qubit_sublattice();

/// The Boolean lattice of subspaces invariant under both projectors of one
/// axis: bottom, the two eigenrays, top. Throws InvalidLabelError unless
/// axis is in {1, 2, 3}.
Lattice invariant_lattice(int axis);

/// The three invariant lattices pasted into one full lattice; element-for-
/// element equal to qubit_sublattice(). Exported by the CLI as
/// "qubit-msigma".
PastedLogic qubit_pasting();

/// The three invariant lattices as a partial logic (no cross-axis meets).
/// Exported by the CLI as "qubit-blocks".
PartialLogic qubit_block_logic();

} // namespace qlogic
