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

#pragma once

#include <string>

#include "qlogic/pasting.hpp"

namespace qlogic {

/// Hasse diagram of the lattice (cover relation, edges pointing upward).
/// Node and edge order follow element ids, so output is deterministic.
std::string hasse_dot(const Lattice &lattice);

/// Hasse diagram of a partial logic; each block's nontrivial elements are
/// grouped in a cluster, with bottom and top shared outside the clusters.
std::string hasse_dot(const PartialLogic &logic);

} // namespace qlogic
