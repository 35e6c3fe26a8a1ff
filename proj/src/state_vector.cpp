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

#include "bqt/state_vector.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "bipartition.hpp"

namespace bqt {

const char *to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::DuplicateLabel:
            return "DuplicateLabel";
        case ErrorKind::UnknownLabel:
            return "UnknownLabel";
        case ErrorKind::SameQubit:
            return "SameQubit";
        case ErrorKind::LabelMismatch:
            return "LabelMismatch";
        case ErrorKind::BadSubset:
            return "BadSubset";
        case ErrorKind::ImpossibleOutcome:
            return "ImpossibleOutcome";
        case ErrorKind::NotGHZForm:
            return "NotGHZForm";
        case ErrorKind::NotNormalized:
            return "NotNormalized";
        case ErrorKind::NotUnitary:
            return "NotUnitary";
        case ErrorKind::InvalidInput:
            return "InvalidInput";
    }
    return "Unknown";
}

BqtError::BqtError(ErrorKind kind, const std::string &what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {
}

namespace {

void check_unique(const std::vector<QubitLabel> &labels) {
    std::set<QubitLabel> seen;
    for (const auto &l : labels) {
        if (!seen.insert(l).second) {
            throw BqtError(ErrorKind::DuplicateLabel, "label '" + l + "' appears twice");
        }
    }
}

double sum_norm(std::span<const Amplitude> amps) {
    double s = 0;
    for (const auto &a : amps) {
        s += std::norm(a);
    }
    return s;
}

}  // namespace

StateVector::StateVector(std::vector<QubitLabel> labels, std::vector<Amplitude> amplitudes)
    : StateVector(std::move(labels), std::move(amplitudes), true) {
}

StateVector::StateVector(std::vector<QubitLabel> labels, std::vector<Amplitude> amplitudes, bool check_norm)
    : labels_(std::move(labels)), amplitudes_(std::move(amplitudes)) {
    check_unique(labels_);
    if (labels_.size() > 30 || amplitudes_.size() != (size_t{1} << labels_.size())) {
        throw BqtError(ErrorKind::InvalidInput, "amplitude count " + std::to_string(amplitudes_.size()) +
                                                    " does not match " + std::to_string(labels_.size()) +
                                                    " qubits");
    }
    if (check_norm) {
        double n = sum_norm(amplitudes_);
        if (std::abs(n - 1.0) > kNormTolerance) {
            throw BqtError(ErrorKind::NotNormalized, "squared norm is " + std::to_string(n));
        }
    }
}

StateVector StateVector::unnormalized(std::vector<QubitLabel> labels, std::vector<Amplitude> amplitudes) {
    return StateVector(std::move(labels), std::move(amplitudes), false);
}

StateVector StateVector::basis(std::vector<QubitLabel> labels, std::string_view bits) {
    if (bits.size() != labels.size()) {
        throw BqtError(ErrorKind::InvalidInput, "bitstring length does not match label count");
    }
    size_t index = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw BqtError(ErrorKind::InvalidInput, "bitstring must contain only 0 and 1");
        }
        index = (index << 1) | static_cast<size_t>(c == '1');
    }
    std::vector<Amplitude> amps(size_t{1} << labels.size(), 0.0);
    amps[index] = 1.0;
    return StateVector(std::move(labels), std::move(amps));
}

StateVector StateVector::scalar(Amplitude value) {
    return StateVector({}, {value});
}

StateVector StateVector::qubit(QubitLabel label, Amplitude c0, Amplitude c1) {
    return StateVector({std::move(label)}, {c0, c1});
}

bool StateVector::has_label(const QubitLabel &label) const {
    return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
}

size_t StateVector::position(const QubitLabel &label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) {
        throw BqtError(ErrorKind::UnknownLabel, "no qubit named '" + label + "'");
    }
    return static_cast<size_t>(it - labels_.begin());
}

Amplitude StateVector::amplitude(std::string_view bits) const {
    if (bits.size() != labels_.size()) {
        throw BqtError(ErrorKind::InvalidInput, "bitstring length does not match label count");
    }
    size_t index = 0;
    for (char c : bits) {
        index = (index << 1) | static_cast<size_t>(c == '1');
    }
    return amplitudes_[index];
}

double StateVector::norm_squared() const {
    return sum_norm(amplitudes_);
}

StateVector StateVector::normalized() const {
    double n = std::sqrt(norm_squared());
    if (n == 0) {
        throw BqtError(ErrorKind::NotNormalized, "cannot normalize the zero vector");
    }
    return scaled(1.0 / n);
}

StateVector StateVector::permuted(const std::vector<QubitLabel> &order) const {
    if (order.size() != labels_.size()) {
        throw BqtError(ErrorKind::LabelMismatch, "permutation has the wrong number of labels");
    }
    check_unique(order);
    std::vector<size_t> src_shift(order.size());
    for (size_t k = 0; k < order.size(); ++k) {
        if (!has_label(order[k])) {
            throw BqtError(ErrorKind::LabelMismatch, "label '" + order[k] + "' not in state");
        }
        src_shift[k] = shift(order[k]);
    }
    const size_t n = order.size();
    std::vector<Amplitude> out(amplitudes_.size());
    for (size_t dst = 0; dst < out.size(); ++dst) {
        size_t src = 0;
        for (size_t k = 0; k < n; ++k) {
            if ((dst >> (n - 1 - k)) & 1) {
                src |= size_t{1} << src_shift[k];
            }
        }
        out[dst] = amplitudes_[src];
    }
    return StateVector(order, std::move(out), false);
}

StateVector StateVector::relabeled(std::vector<QubitLabel> labels) const {
    if (labels.size() != labels_.size()) {
        throw BqtError(ErrorKind::LabelMismatch, "relabel needs one name per qubit");
    }
    return StateVector(std::move(labels), amplitudes_, false);
}

StateVector StateVector::scaled(Amplitude factor) const {
    std::vector<Amplitude> out(amplitudes_);
    for (auto &a : out) {
        a *= factor;
    }
    return StateVector(labels_, std::move(out), false);
}

std::string index_to_bits(size_t index, size_t num_qubits) {
    std::string s(num_qubits, '0');
    for (size_t k = 0; k < num_qubits; ++k) {
        if ((index >> (num_qubits - 1 - k)) & 1) {
            s[k] = '1';
        }
    }
    return s;
}

Gate1Q Gate1Q::identity() {
    return {"I", {1.0, 0.0, 0.0, 1.0}};
}
Gate1Q Gate1Q::pauli_x() {
    return {"X", {0.0, 1.0, 1.0, 0.0}};
}
Gate1Q Gate1Q::pauli_z() {
    return {"Z", {1.0, 0.0, 0.0, -1.0}};
}
Gate1Q Gate1Q::hadamard() {
    const double h = 1.0 / std::sqrt(2.0);
    return {"H", {h, h, h, -h}};
}

Gate1Q Gate1Q::custom(const std::array<Amplitude, 4> &matrix, std::string name) {
    Gate1Q g{std::move(name), matrix};
    if (!g.is_unitary()) {
        throw BqtError(ErrorKind::NotUnitary, "gate '" + g.name + "' is not unitary");
    }
    return g;
}

Gate1Q Gate1Q::operator*(const Gate1Q &rhs) const {
    const auto &l = matrix;
    const auto &r = rhs.matrix;
    return {"custom",
            {l[0] * r[0] + l[1] * r[2], l[0] * r[1] + l[1] * r[3], l[2] * r[0] + l[3] * r[2],
             l[2] * r[1] + l[3] * r[3]}};
}

bool Gate1Q::is_unitary(double tol) const {
    const auto &m = matrix;
    // (U^dagger U)_{ij} = sum_k conj(U_ki) U_kj
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            Amplitude s = std::conj(m[i]) * m[j] + std::conj(m[2 + i]) * m[2 + j];
            Amplitude expected = (i == j) ? 1.0 : 0.0;
            if (std::abs(s - expected) > tol) {
                return false;
            }
        }
    }
    return true;
}

StateVector tensor(const StateVector &left, const StateVector &right) {
    std::vector<QubitLabel> labels = left.labels();
    labels.insert(labels.end(), right.labels().begin(), right.labels().end());
    const auto la = left.amplitudes();
    const auto ra = right.amplitudes();
    std::vector<Amplitude> amps;
    amps.reserve(la.size() * ra.size());
    for (const auto &x : la) {
        for (const auto &y : ra) {
            amps.push_back(x * y);
        }
    }
    // The constructor rejects overlapping label sets.
    return StateVector::unnormalized(std::move(labels), std::move(amps));
}

StateVector apply_1q(const StateVector &sv, const QubitLabel &q, const Gate1Q &gate) {
    const size_t bit = size_t{1} << sv.shift(q);
    std::vector<Amplitude> out(sv.amplitudes().begin(), sv.amplitudes().end());
    const auto &m = gate.matrix;
    for (size_t i = 0; i < out.size(); ++i) {
        if (i & bit) {
            continue;
        }
        const Amplitude v0 = out[i];
        const Amplitude v1 = out[i | bit];
        out[i] = m[0] * v0 + m[1] * v1;
        out[i | bit] = m[2] * v0 + m[3] * v1;
    }
    return StateVector::unnormalized(sv.labels(), std::move(out));
}

namespace {

std::pair<size_t, size_t> two_qubit_bits(const StateVector &sv, const QubitLabel &q1, const QubitLabel &q2) {
    const size_t b1 = size_t{1} << sv.shift(q1);
    const size_t b2 = size_t{1} << sv.shift(q2);
    if (q1 == q2) {
        throw BqtError(ErrorKind::SameQubit, "two-qubit gate applied to '" + q1 + "' twice");
    }
    return {b1, b2};
}

}  // namespace

StateVector apply_cnot(const StateVector &sv, const QubitLabel &control, const QubitLabel &target) {
    auto [cb, tb] = two_qubit_bits(sv, control, target);
    std::vector<Amplitude> out(sv.amplitudes().begin(), sv.amplitudes().end());
    for (size_t i = 0; i < out.size(); ++i) {
        if ((i & cb) && !(i & tb)) {
            std::swap(out[i], out[i | tb]);
        }
    }
    return StateVector::unnormalized(sv.labels(), std::move(out));
}

StateVector apply_cz(const StateVector &sv, const QubitLabel &q1, const QubitLabel &q2) {
    auto [b1, b2] = two_qubit_bits(sv, q1, q2);
    std::vector<Amplitude> out(sv.amplitudes().begin(), sv.amplitudes().end());
    for (size_t i = 0; i < out.size(); ++i) {
        if ((i & b1) && (i & b2)) {
            out[i] = -out[i];
        }
    }
    return StateVector::unnormalized(sv.labels(), std::move(out));
}

Amplitude inner_product(const StateVector &x, const StateVector &y) {
    if (x.num_qubits() != y.num_qubits()) {
        throw BqtError(ErrorKind::LabelMismatch, "states have different qubit counts");
    }
    const StateVector aligned = y.labels() == x.labels() ? y : y.permuted(x.labels());
    Amplitude s = 0;
    const auto xa = x.amplitudes();
    const auto ya = aligned.amplitudes();
    for (size_t i = 0; i < xa.size(); ++i) {
        s += std::conj(xa[i]) * ya[i];
    }
    return s;
}

double fidelity(const StateVector &x, const StateVector &y) {
    return std::norm(inner_product(x, y));
}

std::optional<std::pair<StateVector, StateVector>> split_product(const StateVector &sv,
                                                                 const std::vector<QubitLabel> &first,
                                                                 double tol) {
    detail::Bipartition part(sv, first);
    const size_t rows = part.rows();
    const size_t cols = part.cols();
    auto at = [&](size_t r, size_t c) { return sv.amplitude(part.full_index(r, c)); };

    size_t best_r = 0, best_c = 0;
    double best = -1;
    for (size_t r = 0; r < rows; ++r) {
        for (size_t c = 0; c < cols; ++c) {
            double v = std::abs(at(r, c));
            if (v > best) {
                best = v;
                best_r = r;
                best_c = c;
            }
        }
    }
    if (best <= 0) {
        return std::nullopt;
    }
    // For M = u v^T: u ~ column best_c, v ~ row best_r / M(best_r, best_c).
    std::vector<Amplitude> u(rows), v(cols);
    double col_norm = 0;
    for (size_t r = 0; r < rows; ++r) {
        u[r] = at(r, best_c);
        col_norm += std::norm(u[r]);
    }
    col_norm = std::sqrt(col_norm);
    for (auto &x : u) {
        x /= col_norm;
    }
    const Amplitude pivot = at(best_r, best_c);
    for (size_t c = 0; c < cols; ++c) {
        v[c] = at(best_r, c) * col_norm / pivot;
    }
    for (size_t r = 0; r < rows; ++r) {
        for (size_t c = 0; c < cols; ++c) {
            if (std::abs(at(r, c) - u[r] * v[c]) > tol) {
                return std::nullopt;
            }
        }
    }
    return std::make_pair(StateVector::unnormalized(first, std::move(u)),
                          StateVector::unnormalized(part.rest_labels(), std::move(v)));
}

void write_amplitude_dump(std::ostream &out, const StateVector &sv) {
    out << "# labels:";
    for (const auto &l : sv.labels()) {
        out << ' ' << l;
    }
    out << '\n';
    char buf[128];
    for (size_t i = 0; i < sv.dimension(); ++i) {
        const Amplitude a = sv.amplitude(i);
        if (a == Amplitude(0.0)) {
            continue;
        }
        std::snprintf(buf, sizeof(buf), " %.17g %.17g\n", a.real(), a.imag());
        out << index_to_bits(i, sv.num_qubits()) << buf;
    }
}

std::string amplitude_dump(const StateVector &sv) {
    std::ostringstream ss;
    write_amplitude_dump(ss, sv);
    return ss.str();
}

StateVector read_amplitude_dump(std::istream &in) {
    std::string line;
    std::optional<std::vector<QubitLabel>> labels;
    std::map<std::string, Amplitude> entries;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            continue;
        }
        std::istringstream ls(line);
        if (line[0] == '#') {
            std::string hash, key;
            ls >> hash >> key;
            if (key == "labels:") {
                if (labels) {
                    throw BqtError(ErrorKind::InvalidInput, "duplicate labels header");
                }
                labels.emplace();
                std::string l;
                while (ls >> l) {
                    labels->push_back(l);
                }
            }
            continue;
        }
        if (!labels) {
            throw BqtError(ErrorKind::InvalidInput, "amplitude line before '# labels:' header");
        }
        std::string bits;
        double re = 0, im = 0;
        if (!(ls >> bits >> re >> im)) {
            throw BqtError(ErrorKind::InvalidInput, "malformed amplitude line: " + line);
        }
        std::string rest;
        if (ls >> rest) {
            throw BqtError(ErrorKind::InvalidInput, "trailing data on amplitude line: " + line);
        }
        if (bits.size() != labels->size() || bits.find_first_not_of("01") != std::string::npos) {
            throw BqtError(ErrorKind::InvalidInput, "bad bitstring '" + bits + "'");
        }
        if (!entries.emplace(bits, Amplitude(re, im)).second) {
            throw BqtError(ErrorKind::InvalidInput, "ket " + bits + " listed twice");
        }
    }
    if (!labels) {
        throw BqtError(ErrorKind::InvalidInput, "missing '# labels:' header");
    }
    std::vector<Amplitude> amps(size_t{1} << labels->size(), 0.0);
    for (const auto &[bits, a] : entries) {
        size_t index = 0;
        for (char c : bits) {
            index = (index << 1) | static_cast<size_t>(c == '1');
        }
        amps[index] = a;
    }
    return StateVector::unnormalized(std::move(*labels), std::move(amps));
}

}  // namespace bqt
