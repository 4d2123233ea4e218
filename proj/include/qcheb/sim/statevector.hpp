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

#include "qcheb/sim/gate.hpp"
#include "qcheb/sim/types.hpp"

namespace qcheb::sim {

class Circuit;

/**
 * Dense pure state of `n_qubits` qubits, 2^n double-precision amplitudes.
 * Index bit (n-1-q) holds qubit q, i.e. qubit 0 is most significant.
 */
class Statevector {
  public:
    /// |0...0> on `n_qubits` qubits; ConfigError outside [1, kMaxQubits].
    explicit Statevector(std::size_t n_qubits);

    /// Takes ownership of `amps`; the length must be a power of two >= 2.
    static Statevector from_amplitudes(std::vector<Complex> amps);

    std::size_t n_qubits() const noexcept { return n_qubits_; }
    std::size_t size() const noexcept { return amps_.size(); }

    std::span<const Complex> amplitudes() const noexcept { return amps_; }
    std::span<Complex> amplitudes() noexcept { return amps_; }

    const Complex &operator[](std::size_t i) const { return amps_[i]; }
    Complex &operator[](std::size_t i) { return amps_[i]; }

    double norm_squared() const;
    void normalize();

    void apply(const Gate &gate);
    void apply(const Circuit &circuit);

    /// |amplitude|^2 for every basis index.
    std::vector<double> probabilities() const;

  private:
    Statevector() = default;

    std::size_t n_qubits_ = 0;
    std::vector<Complex> amps_;
};

Statevector zero_state(std::size_t n);

Statevector apply_gate(Statevector state, const Gate &gate);

Statevector apply_circuit(Statevector state, const Circuit &circuit);

/// <a|b>, conjugating `a`.
Complex inner_product(const Statevector &a, const Statevector &b);

} // namespace qcheb::sim
