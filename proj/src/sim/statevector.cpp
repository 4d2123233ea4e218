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
#include "qcheb/sim/statevector.hpp"

#include <cmath>
#include <string>

#include "qcheb/errors.hpp"
#include "qcheb/sim/circuit.hpp"
#include "qcheb/sim/kernels.hpp"

namespace qcheb::sim {

Statevector::Statevector(std::size_t n_qubits) : n_qubits_(n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw ConfigError("qubit count " + std::to_string(n_qubits) + " outside [1, " +
                          std::to_string(kMaxQubits) + "]");
    }
    amps_.assign(std::size_t{1} << n_qubits, Complex{0.0, 0.0});
    amps_[0] = 1.0;
}

Statevector Statevector::from_amplitudes(std::vector<Complex> amps) {
    const std::size_t len = amps.size();
    if (len < 2 || (len & (len - 1)) != 0) {
        throw UsageError("amplitude vector length " + std::to_string(len) +
                         " is not a power of two");
    }
    std::size_t n = 0;
    while ((std::size_t{1} << n) < len) {
        ++n;
    }
    if (n > kMaxQubits) {
        throw ConfigError("register too large");
    }
    Statevector s;
    s.n_qubits_ = n;
    s.amps_ = std::move(amps);
    return s;
}

double Statevector::norm_squared() const { return kernels::omp::norm_squared(amps_); }

void Statevector::normalize() {
    const double norm = std::sqrt(norm_squared());
    if (!(norm > 0.0) || !std::isfinite(norm)) {
        throw NumericalError("cannot normalize a zero or non-finite state");
    }
    for (auto &a : amps_) {
        a /= norm;
    }
}

void Statevector::apply(const Gate &gate) {
    gate.validate(n_qubits_);
    if (gate.kind == GateKind::SWAP) {
        kernels::omp::apply_swap(amps_, n_qubits_, gate.targets[0], gate.targets[1], gate.controls);
    } else {
        kernels::omp::apply_1q(amps_, n_qubits_, gate.targets[0], gate.controls, gate.matrix());
    }
}

void Statevector::apply(const Circuit &circuit) {
    if (circuit.n_qubits() != n_qubits_) {
        throw UsageError("circuit width " + std::to_string(circuit.n_qubits()) +
                         " does not match state width " + std::to_string(n_qubits_));
    }
    for (const auto &g : circuit.gates()) {
        apply(g);
    }
}

std::vector<double> Statevector::probabilities() const {
    std::vector<double> probs(amps_.size());
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        probs[i] = std::norm(amps_[i]);
    }
    return probs;
}

Statevector zero_state(std::size_t n) { return Statevector(n); }

Statevector apply_gate(Statevector state, const Gate &gate) {
    state.apply(gate);
    return state;
}

Statevector apply_circuit(Statevector state, const Circuit &circuit) {
    state.apply(circuit);
    return state;
}

Complex inner_product(const Statevector &a, const Statevector &b) {
    if (a.n_qubits() != b.n_qubits()) {
        throw UsageError("inner product of states with different qubit counts");
    }
    return kernels::omp::inner_product(a.amplitudes(), b.amplitudes());
}

} // namespace qcheb::sim
