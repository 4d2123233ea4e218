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

/**
 * @file encodings.hpp
 * x-parameterized feature-map circuits.
 *
 * Chebyshev map, on N+1 qubits with the ancilla as qubit 0 (most significant)
 * and system qubit q = 1..N carrying binary weight 2^{N-q}. With
 * theta = arccos(x):
 *
 *   1. H on every qubit: (|0>+|1>)_a (x) sum_k |k>, up to 2^{-(N+1)/2}.
 *   2. P~^[1]_{2^q}(x) on each system qubit q, adding phase 2^{N-q} theta,
 *      so |k> picks up e^{i k theta} on both ancilla branches.
 *   3. The same gates with s = -2, controlled by the ancilla. Since
 *      e^{-ik theta} = e^{ik theta} e^{-2ik theta}, the ancilla-1 branch now
 *      carries e^{-ik theta}.
 *   4. Rotation of the ancilla conditioned on the system being |0...0>
 *      (X-conjugated multi-controlled R_Y(-pi/2)). On that component the
 *      ancilla is |+> after steps 1-3, and R_Y(-pi/2)|+> = |0>.
 *   5. H on the ancilla. Its |0> branch holds
 *      (e^{ik theta} + e^{-ik theta})/2 = T_k(x) for k >= 1, and, because of
 *      step 4, 1/sqrt2 instead of 1 for k = 0.
 *
 * The ancilla-0 branch is therefore exactly tau(x)/sqrt2, and post-selection
 * succeeds with probability N(x)^2 / 2 (one half at the nodes). The rotation
 * angle in step 4 does not depend on x.
 */

#include <cstddef>
#include <string>
#include <vector>

#include "qcheb/sim/circuit.hpp"
#include "qcheb/sim/statevector.hpp"

namespace qcheb::enc {

enum class MapKind { chebyshev, phase };

const char *to_string(MapKind kind);

/// Parses "chebyshev" / "phase"; ConfigError otherwise.
MapKind parse_map_kind(const std::string &name);

struct FeatureMapSpec {
    MapKind kind = MapKind::chebyshev;
    std::size_t n_qubits = 1; ///< system qubits, ancilla excluded
    double x = 0.0;

    /// DomainError unless |x| <= 1 (chebyshev) or 0 <= x < 1 (phase).
    void validate() const;
};

struct PostSelectedState {
    sim::Statevector state;
    double success_probability = 0.0;
};

/// Feature-map circuit on N+1 qubits whose ancilla-0 branch is tau(x)/sqrt2.
sim::Circuit chebyshev_feature_map_circuit(std::size_t n_qubits, double x);

/**
 * Projects qubit 0 of `full` onto |0> and renormalizes. NumericalError if the
 * branch weight is below 1e-12.
 */
PostSelectedState post_select_ancilla_zero(const sim::Statevector &full);

/// Runs the Chebyshev map on |0...0> and post-selects: the normalized tau~(x).
PostSelectedState prepare_tau_tilde(std::size_t n_qubits, double x);

/// Hadamards then P(2 pi 2^{N-1-j} x) on qubit j: 2^{-N/2} sum_k e^{2 pi i k x}|k>.
sim::Circuit phase_feature_map_circuit(std::size_t n_qubits, double x);

/// Closed-form amplitudes of the phase-map state.
std::vector<sim::Complex> phase_state(std::size_t n_qubits, double x);

/// The normalized N-qubit feature state for `request` (post-selected for chebyshev).
sim::Statevector prepare_feature_state(const FeatureMapSpec &request);

} // namespace qcheb::enc
