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

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "bqt/protocol.hpp"

namespace bqt::cli {

enum ExitCode : int { kOk = 0, kInvariantViolation = 1, kInvalidInput = 2 };

/// Upper bound on m and n for the multiqubit command.
inline constexpr size_t kMaxGhzSize = 5;

struct RunConfig {
    std::optional<std::string> a0, a1, b0, b1;  ///< "re,im"
    uint64_t seed = 1;
    size_t m = 1;
    size_t n = 1;
    bool enumerate = false;
    std::string policy_a = "honest";
    std::string policy_b = "honest";
    bool json = false;
    std::optional<std::string> out_path;
    std::optional<std::string> channel_path;
    bool regen_table = false;
    size_t trials = 10000;
};

/// "re,im" or "re".
Amplitude parse_complex(const std::string &text);

/// Explicit coefficients (renormalized when within 1e-6 of unit norm) or a
/// seeded random draw when none are given.
std::pair<QubitCoefficients, QubitCoefficients> resolve_coefficients(const RunConfig &cfg);

/// 1e-10 unless BQT_TOLERANCE is set.
double acceptance_tolerance();

/// Entry point shared by the binary and the tests. Returns the exit code.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace bqt::cli
