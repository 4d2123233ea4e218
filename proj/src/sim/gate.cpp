// Copyright 2026 The qcheb Authors
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
#include "qcheb/sim/gate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qcheb/errors.hpp"

namespace qcheb::sim {

std::string to_string(GateKind kind) {
    switch (kind) {
    case GateKind::H: return "H";
    case GateKind::X: return "X";
    case GateKind::P: return "P";
    case GateKind::PTilde: return "Ptilde";
    case GateKind::RX: return "RX";
    case GateKind::RY: return "RY";
    case GateKind::RZ: return "RZ";
    case GateKind::CNOT: return "CNOT";
    case GateKind::SWAP: return "SWAP";
    case GateKind::Matrix: return "U";
    }
    return "?";
}

double ScaledPhase::phase() const {
    return scale * std::ldexp(1.0, static_cast<int>(reg_bits)) * std::acos(x) / divisor;
}

namespace gates {

Matrix2 h_matrix() {
    const double r = std::numbers::sqrt2 / 2.0;
    return {Complex{r}, Complex{r}, Complex{r}, Complex{-r}};
}

Matrix2 x_matrix() { return {Complex{0.0}, Complex{1.0}, Complex{1.0}, Complex{0.0}}; }

Matrix2 p_matrix(double phi) {
    return {Complex{1.0}, Complex{0.0}, Complex{0.0}, std::polar(1.0, phi)};
}

Matrix2 rx_matrix(double theta) {
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    return {Complex{c}, Complex{0.0, -s}, Complex{0.0, -s}, Complex{c}};
}

Matrix2 ry_matrix(double theta) {
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    return {Complex{c}, Complex{-s}, Complex{s}, Complex{c}};
}

Matrix2 rz_matrix(double theta) {
    return {std::polar(1.0, -theta / 2.0), Complex{0.0}, Complex{0.0}, std::polar(1.0, theta / 2.0)};
}

namespace {
Gate single(GateKind kind, std::size_t q, double angle = 0.0) {
    Gate g;
    g.kind = kind;
    g.targets = {q};
    g.angle = angle;
    return g;
}
} // namespace

Gate h(std::size_t q) { return single(GateKind::H, q); }
Gate x(std::size_t q) { return single(GateKind::X, q); }
Gate p(std::size_t q, double phi) { return single(GateKind::P, q, phi); }
Gate rx(std::size_t q, double theta) { return single(GateKind::RX, q, theta); }
Gate ry(std::size_t q, double theta) { return single(GateKind::RY, q, theta); }
Gate rz(std::size_t q, double theta) { return single(GateKind::RZ, q, theta); }

Gate ptilde(std::size_t q, double s, double l, double x, std::size_t reg_bits) {
    if (!(std::abs(x) <= 1.0)) {
        throw DomainError("scaled phase gate requires |x| <= 1");
    }
    Gate g = single(GateKind::PTilde, q);
    g.scaled = ScaledPhase{s, l, x, reg_bits};
    return g;
}

Gate cnot(std::size_t control, std::size_t target) {
    Gate g = single(GateKind::CNOT, target);
    g.controls = {control};
    return g;
}

Gate swap(std::size_t a, std::size_t b) {
    Gate g;
    g.kind = GateKind::SWAP;
    g.targets = {a, b};
    return g;
}

Gate matrix(std::size_t q, const Matrix2 &m) {
    Gate g = single(GateKind::Matrix, q);
    g.custom = m;
    return g;
}

} // namespace gates

Matrix2 Gate::matrix() const {
    switch (kind) {
    case GateKind::H: return gates::h_matrix();
    case GateKind::X:
    case GateKind::CNOT: return gates::x_matrix();
    case GateKind::P: return gates::p_matrix(angle);
    case GateKind::PTilde: return gates::p_matrix(scaled.phase());
    case GateKind::RX: return gates::rx_matrix(angle);
    case GateKind::RY: return gates::ry_matrix(angle);
    case GateKind::RZ: return gates::rz_matrix(angle);
    case GateKind::Matrix: return custom;
    case GateKind::SWAP: break;
    }
    throw UsageError("SWAP has no single-qubit matrix");
}

Gate Gate::adjoint() const {
    Gate g = *this;
    switch (kind) {
    case GateKind::P:
    case GateKind::RX:
    case GateKind::RY:
    case GateKind::RZ: g.angle = -angle; break;
    case GateKind::PTilde: g.scaled.scale = -scaled.scale; break;
    case GateKind::Matrix:
        g.custom = {std::conj(custom[0]), std::conj(custom[2]), std::conj(custom[1]),
                    std::conj(custom[3])};
        break;
    default: break;
    }
    return g;
}

void Gate::validate(std::size_t n_qubits) const {
    const std::size_t want = kind == GateKind::SWAP ? 2 : 1;
    if (targets.size() != want) {
        throw UsageError(to_string(kind) + " gate needs " + std::to_string(want) + " target(s)");
    }
    if (kind == GateKind::CNOT && controls.empty()) {
        throw UsageError("CNOT gate needs a control qubit");
    }
    std::vector<std::size_t> all(targets);
    all.insert(all.end(), controls.begin(), controls.end());
    for (auto q : all) {
        if (q >= n_qubits) {
            throw UsageError("qubit index " + std::to_string(q) + " out of range for " +
                             std::to_string(n_qubits) + "-qubit register");
        }
    }
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
        throw UsageError(to_string(kind) + " gate wires a qubit more than once");
    }
}

Gate &Gate::controlled_by(std::vector<std::size_t> ctrls) {
    controls.insert(controls.end(), ctrls.begin(), ctrls.end());
    return *this;
}

} // namespace qcheb::sim
