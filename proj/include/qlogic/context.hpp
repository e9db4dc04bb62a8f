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
#include <vector>

#include "qlogic/linalg.hpp"

namespace qlogic {

/// A maximal set of mutually orthogonal nontrivial projectors summing to the
/// identity: one complete measurement.
class Context {
  public:
    /// Validates the defining requirements. Throws NotOrthogonalError,
    /// IncompleteSumError, or TrivialMemberError on violation.
    Context(std::string label, std::vector<Projector> projectors);

    const std::string &label() const { return label_; }
    const std::vector<Projector> &projectors() const { return projectors_; }
    std::size_t size() const { return projectors_.size(); }
    Eigen::Index dim() const { return projectors_.front().dim(); }

  private:
    std::string label_;
    std::vector<Projector> projectors_;
};

/// Convenience constructor with an empty label.
Context make_context(std::vector<Projector> projectors);

} // namespace qlogic
