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
#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "qcheb/sim/gate.hpp"

namespace qcheb::sim {

/// Ordered gate list on a fixed register. Gates are validated on insertion.
class Circuit {
  public:
    explicit Circuit(std::size_t n_qubits);

    std::size_t n_qubits() const noexcept { return n_qubits_; }
    std::size_t size() const noexcept { return gates_.size(); }
    bool empty() const noexcept { return gates_.empty(); }
    const std::vector<Gate> &gates() const noexcept { return gates_; }
    std::vector<Gate> &gates() noexcept { return gates_; }

    Circuit &add(Gate gate);

    /// Appends `other`; both circuits must have the same width.
    Circuit &append(const Circuit &other);

    /// Appends `other` with its qubit i rewired to `wires[i]`.
    Circuit &append(const Circuit &other, std::span<const std::size_t> wires);

    Circuit &h(std::size_t q) { return add(gates::h(q)); }
    Circuit &x(std::size_t q) { return add(gates::x(q)); }
    Circuit &p(std::size_t q, double phi) { return add(gates::p(q, phi)); }
    Circuit &rx(std::size_t q, double t) { return add(gates::rx(q, t)); }
    Circuit &ry(std::size_t q, double t) { return add(gates::ry(q, t)); }
    Circuit &rz(std::size_t q, double t) { return add(gates::rz(q, t)); }
    Circuit &cnot(std::size_t c, std::size_t t) { return add(gates::cnot(c, t)); }
    Circuit &swap(std::size_t a, std::size_t b) { return add(gates::swap(a, b)); }

    /// Reversed gate order with every gate conjugated.
    Circuit adjoint() const;

  private:
    std::size_t n_qubits_;
    std::vector<Gate> gates_;
};

/// Dense unitary of `circuit`, built column by column from basis states.
Eigen::MatrixXcd circuit_matrix(const Circuit &circuit);

/**
 * Quantum Fourier transform on `n` qubits (1 <= n <= 12), terminal swap layer
 * included, so the matrix is exactly F[j,k] = exp(2 pi i j k / 2^n) / 2^{n/2}.
 */
Circuit qft_circuit(std::size_t n);

/// Analytic DFT matrix in the same convention as qft_circuit.
Eigen::MatrixXcd dft_matrix(std::size_t n);

} // namespace qcheb::sim
