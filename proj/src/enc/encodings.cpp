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
#include "qcheb/encodings.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qcheb/errors.hpp"

namespace qcheb::enc {

namespace {

void check_qubits(std::size_t n) {
    if (n < 1 || n > 10) {
        throw ConfigError("feature map qubit count " + std::to_string(n) + " outside [1, 10]");
    }
}

} // namespace

const char *to_string(MapKind kind) { return kind == MapKind::chebyshev ? "chebyshev" : "phase"; }

MapKind parse_map_kind(const std::string &name) {
    if (name == "chebyshev") {
        return MapKind::chebyshev;
    }
    if (name == "phase") {
        return MapKind::phase;
    }
    throw ConfigError("unknown feature map '" + name + "' (expected chebyshev or phase)");
}

void FeatureMapSpec::validate() const {
    check_qubits(n_qubits);
    if (kind == MapKind::chebyshev && !(std::abs(x) <= 1.0)) {
        throw DomainError("Chebyshev feature map requires |x| <= 1");
    }
    if (kind == MapKind::phase && !(x >= 0.0 && x < 1.0)) {
        throw DomainError("phase feature map requires 0 <= x < 1");
    }
}

sim::Circuit chebyshev_feature_map_circuit(std::size_t n_qubits, double x) {
    FeatureMapSpec{MapKind::chebyshev, n_qubits, x}.validate();
    const std::size_t width = n_qubits + 1;
    sim::Circuit c(width);
    for (std::size_t q = 0; q < width; ++q) {
        c.h(q);
    }
    for (std::size_t q = 1; q < width; ++q) {
        c.add(sim::gates::ptilde(q, 1.0, std::ldexp(1.0, static_cast<int>(q)), x, n_qubits));
    }
    for (std::size_t q = 1; q < width; ++q) {
        c.add(sim::gates::ptilde(q, -2.0, std::ldexp(1.0, static_cast<int>(q)), x, n_qubits)
                  .controlled_by({0}));
    }

    std::vector<std::size_t> system;
    for (std::size_t q = 1; q < width; ++q) {
        system.push_back(q);
        c.x(q);
    }
    c.add(sim::gates::ry(0, -std::numbers::pi / 2.0).controlled_by(system));
    for (auto q : system) {
        c.x(q);
    }
    c.h(0);
    return c;
}

PostSelectedState post_select_ancilla_zero(const sim::Statevector &full) {
    const std::size_t half = full.size() / 2;
    std::vector<sim::Complex> branch(full.amplitudes().begin(),
                                     full.amplitudes().begin() + static_cast<std::ptrdiff_t>(half));
    double weight = 0.0;
    for (const auto &a : branch) {
        weight += std::norm(a);
    }
    if (weight < 1e-12) {
        throw NumericalError("ancilla-0 branch has vanishing weight " + std::to_string(weight));
    }
    const double scale = 1.0 / std::sqrt(weight);
    for (auto &a : branch) {
        a *= scale;
    }
    return {sim::Statevector::from_amplitudes(std::move(branch)), weight};
}

PostSelectedState prepare_tau_tilde(std::size_t n_qubits, double x) {
    auto circuit = chebyshev_feature_map_circuit(n_qubits, x);
    auto full = sim::apply_circuit(sim::zero_state(n_qubits + 1), circuit);
    return post_select_ancilla_zero(full);
}

sim::Circuit phase_feature_map_circuit(std::size_t n_qubits, double x) {
    FeatureMapSpec{MapKind::phase, n_qubits, x}.validate();
    sim::Circuit c(n_qubits);
    for (std::size_t q = 0; q < n_qubits; ++q) {
        c.h(q);
    }
    for (std::size_t q = 0; q < n_qubits; ++q) {
        const double weight = std::ldexp(1.0, static_cast<int>(n_qubits - 1 - q));
        c.p(q, 2.0 * std::numbers::pi * weight * x);
    }
    return c;
}

std::vector<sim::Complex> phase_state(std::size_t n_qubits, double x) {
    const std::size_t m = std::size_t{1} << n_qubits;
    const double scale = 1.0 / std::sqrt(static_cast<double>(m));
    std::vector<sim::Complex> amps(m);
    for (std::size_t k = 0; k < m; ++k) {
        amps[k] = std::polar(scale, 2.0 * std::numbers::pi * static_cast<double>(k) * x);
    }
    return amps;
}

sim::Statevector prepare_feature_state(const FeatureMapSpec &request) {
    request.validate();
    if (request.kind == MapKind::chebyshev) {
        return prepare_tau_tilde(request.n_qubits, request.x).state;
    }
    return sim::apply_circuit(sim::zero_state(request.n_qubits),
                              phase_feature_map_circuit(request.n_qubits, request.x));
}

} // namespace qcheb::enc
