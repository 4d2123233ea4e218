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
#include "qcheb/sim/circuit.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qcheb/errors.hpp"
#include "qcheb/sim/statevector.hpp"

namespace qcheb::sim {

Circuit::Circuit(std::size_t n_qubits) : n_qubits_(n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw ConfigError("circuit width " + std::to_string(n_qubits) + " out of range");
    }
}

Circuit &Circuit::add(Gate gate) {
    gate.validate(n_qubits_);
    gates_.push_back(std::move(gate));
    return *this;
}

Circuit &Circuit::append(const Circuit &other) {
    if (other.n_qubits() != n_qubits_) {
        throw UsageError("appending a circuit of different width");
    }
    gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
    return *this;
}

Circuit &Circuit::append(const Circuit &other, std::span<const std::size_t> wires) {
    if (wires.size() != other.n_qubits()) {
        throw UsageError("wire map size does not match sub-circuit width");
    }
    for (Gate g : other.gates()) {
        for (auto &t : g.targets) {
            t = wires[t];
        }
        for (auto &c : g.controls) {
            c = wires[c];
        }
        add(std::move(g));
    }
    return *this;
}

Circuit Circuit::adjoint() const {
    Circuit out(n_qubits_);
    out.gates_.reserve(gates_.size());
    for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) {
        out.gates_.push_back(it->adjoint());
    }
    return out;
}

Eigen::MatrixXcd circuit_matrix(const Circuit &circuit) {
    const std::size_t dim = std::size_t{1} << circuit.n_qubits();
    Eigen::MatrixXcd u(dim, dim);
    for (std::size_t col = 0; col < dim; ++col) {
        std::vector<Complex> basis(dim, Complex{0.0});
        basis[col] = 1.0;
        auto s = Statevector::from_amplitudes(std::move(basis));
        s.apply(circuit);
        for (std::size_t row = 0; row < dim; ++row) {
            u(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = s[row];
        }
    }
    return u;
}

Circuit qft_circuit(std::size_t n) {
    if (n < 1 || n > 12) {
        throw ConfigError("QFT width must lie in [1, 12]");
    }
    Circuit c(n);
    for (std::size_t q = 0; q < n; ++q) {
        c.h(q);
        for (std::size_t m = q + 1; m < n; ++m) {
            const double phi = 2.0 * std::numbers::pi / std::ldexp(1.0, static_cast<int>(m - q + 1));
            c.add(gates::p(q, phi).controlled_by({m}));
        }
    }
    for (std::size_t q = 0; q < n / 2; ++q) {
        c.swap(q, n - 1 - q);
    }
    return c;
}

Eigen::MatrixXcd dft_matrix(std::size_t n) {
    const auto dim = static_cast<Eigen::Index>(std::size_t{1} << n);
    const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
    Eigen::MatrixXcd f(dim, dim);
    for (Eigen::Index j = 0; j < dim; ++j) {
        for (Eigen::Index k = 0; k < dim; ++k) {
            // reduce jk mod dim first so the phase stays exact for large indices
            const auto r = static_cast<double>((j * k) % dim);
            f(j, k) = std::polar(scale, 2.0 * std::numbers::pi * r / static_cast<double>(dim));
        }
    }
    return f;
}

} // namespace qcheb::sim
