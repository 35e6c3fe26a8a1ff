// Copyright 2026 The bqt-sim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <vector>

#include "bqt/state_vector.hpp"

namespace bqt::detail {

/// Maps (row, col) of a bipartition of a register onto a full amplitude index.
/// Rows enumerate the `first` labels (in the given order, MSB first), columns
/// the remaining labels in register order.
class Bipartition {
   public:
    Bipartition(const StateVector &sv, const std::vector<QubitLabel> &first);

    size_t rows() const {
        return size_t{1} << first_shifts_.size();
    }
    size_t cols() const {
        return size_t{1} << rest_shifts_.size();
    }
    size_t full_index(size_t row, size_t col) const;

    const std::vector<QubitLabel> &rest_labels() const {
        return rest_labels_;
    }

   private:
    std::vector<size_t> first_shifts_;
    std::vector<size_t> rest_shifts_;
    std::vector<QubitLabel> rest_labels_;
};

}  // namespace bqt::detail
