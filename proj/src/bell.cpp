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

#include "bqt/bell.hpp"

#include <cmath>

#include "bipartition.hpp"

namespace bqt {

std::string_view to_string(BellOutcome o) {
    switch (o) {
        case BellOutcome::PsiPlus:
            return "psi+";
        case BellOutcome::PsiMinus:
            return "psi-";
        case BellOutcome::PhiPlus:
            return "phi+";
        case BellOutcome::PhiMinus:
            return "phi-";
    }
    return "?";
}

std::string_view to_bits(BellOutcome o) {
    static constexpr std::array<std::string_view, 4> kBits = {"00", "01", "10", "11"};
    return kBits[static_cast<size_t>(o)];
}

std::string_view to_symbol(BellOutcome o) {
    static constexpr std::array<std::string_view, 4> kSymbols = {"ψ+", "ψ-", "φ+", "φ-"};
    return kSymbols[static_cast<size_t>(o)];
}

BellOutcome bell_from_string(std::string_view s) {
    for (auto o : kBellOutcomes) {
        if (to_string(o) == s) {
            return o;
        }
    }
    throw BqtError(ErrorKind::InvalidInput, "unknown Bell outcome '" + std::string(s) + "'");
}

BellOutcome bell_from_bits(std::string_view bits) {
    for (auto o : kBellOutcomes) {
        if (to_bits(o) == bits) {
            return o;
        }
    }
    throw BqtError(ErrorKind::InvalidInput, "bad Bell code '" + std::string(bits) + "'");
}

std::array<double, 4> bell_vector(BellOutcome o) {
    const double h = 1.0 / std::sqrt(2.0);
    switch (o) {
        case BellOutcome::PsiPlus:
            return {h, 0, 0, h};
        case BellOutcome::PsiMinus:
            return {h, 0, 0, -h};
        case BellOutcome::PhiPlus:
            return {0, h, h, 0};
        case BellOutcome::PhiMinus:
            return {0, h, -h, 0};
    }
    return {};
}

namespace {

BellProjection project_unchecked(const StateVector &sv, const QubitLabel &qa, const QubitLabel &qb,
                                 BellOutcome o) {
    if (qa == qb) {
        throw BqtError(ErrorKind::SameQubit, "Bell measurement on '" + qa + "' twice");
    }
    sv.position(qa);
    sv.position(qb);
    detail::Bipartition part(sv, {qa, qb});
    const auto bell = bell_vector(o);
    std::vector<Amplitude> out(part.cols(), 0.0);
    for (size_t c = 0; c < part.cols(); ++c) {
        Amplitude s = 0;
        for (size_t r = 0; r < 4; ++r) {
            if (bell[r] != 0) {
                s += bell[r] * sv.amplitude(part.full_index(r, c));
            }
        }
        out[c] = s;
    }
    double prob = 0;
    for (const auto &a : out) {
        prob += std::norm(a);
    }
    BellProjection result{o, prob, std::nullopt};
    if (prob >= kImpossibleThreshold) {
        const double inv = 1.0 / std::sqrt(prob);
        for (auto &a : out) {
            a *= inv;
        }
        result.collapsed = StateVector::unnormalized(part.rest_labels(), std::move(out));
    }
    return result;
}

}  // namespace

BellProjection bell_project(const StateVector &sv, const QubitLabel &qa, const QubitLabel &qb, BellOutcome o) {
    BellProjection p = project_unchecked(sv, qa, qb, o);
    if (!p.collapsed) {
        throw BqtError(ErrorKind::ImpossibleOutcome, std::string("outcome ") + std::string(to_string(o)) +
                                                         " has probability " + std::to_string(p.prob));
    }
    return p;
}

std::vector<BellProjection> bsm_enumerate(const StateVector &sv, const QubitLabel &qa, const QubitLabel &qb) {
    std::vector<BellProjection> out;
    out.reserve(4);
    for (auto o : kBellOutcomes) {
        out.push_back(project_unchecked(sv, qa, qb, o));
    }
    return out;
}

BellProjection bsm_sample(const StateVector &sv, const QubitLabel &qa, const QubitLabel &qb, Rng &rng) {
    auto all = bsm_enumerate(sv, qa, qb);
    double total = 0;
    for (const auto &p : all) {
        if (p.collapsed) {
            total += p.prob;
        }
    }
    const double u = rng.uniform() * total;
    double acc = 0;
    std::optional<size_t> last;
    for (size_t k = 0; k < all.size(); ++k) {
        if (!all[k].collapsed) {
            continue;
        }
        last = k;
        acc += all[k].prob;
        if (u < acc) {
            return std::move(all[k]);
        }
    }
    if (!last) {
        throw BqtError(ErrorKind::ImpossibleOutcome, "no Bell outcome has nonzero probability");
    }
    return std::move(all[*last]);
}

BellProjection bsm_sample(const StateVector &sv, const QubitLabel &qa, const QubitLabel &qb, uint64_t seed) {
    Rng rng(seed);
    return bsm_sample(sv, qa, qb, rng);
}

}  // namespace bqt
