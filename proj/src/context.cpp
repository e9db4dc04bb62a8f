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

#include "qlogic/context.hpp"

#include <utility>

namespace qlogic {

Context::Context(std::string label, std::vector<Projector> projectors)
    : label_(std::move(label)), projectors_(std::move(projectors)) {
    if (projectors_.empty()) {
        throw IncompleteSumError("a context needs at least one projector");
    }
    const Eigen::Index d = projectors_.front().dim();
    for (const auto &p : projectors_) {
        if (p.dim() != d) {
            throw DimensionMismatchError(
                "context members must share one dimension");
        }
        if (p.is_zero() || p.is_identity()) {
            throw TrivialMemberError(
                "context members must be nontrivial projectors");
        }
    }
    for (std::size_t i = 0; i < projectors_.size(); ++i) {
        for (std::size_t j = i + 1; j < projectors_.size(); ++j) {
            if (!projectors_[i].orthogonal_to(projectors_[j])) {
                throw NotOrthogonalError(
                    "context members " + std::to_string(i) + " and " +
                    std::to_string(j) + " are not mutually orthogonal");
            }
        }
    }
    Matrix sum = Matrix::Zero(d, d);
    for (const auto &p : projectors_) {
        sum += p.matrix();
    }
    if ((sum - Matrix::Identity(d, d)).norm() >= kEpsilon) {
        throw IncompleteSumError("context members do not sum to the identity");
    }
}

Context make_context(std::vector<Projector> projectors) {
    return Context("", std::move(projectors));
}

} // namespace qlogic
