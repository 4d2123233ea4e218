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
 * @file qcht.hpp
 * Quantum Chebyshev transform: |0>_a|j> -> |0>_a|tau(x_j)> on N+1 qubits.
 *
 * Circuit (ancilla = qubit 0, M = 2^N, system qubit q has weight 2^{N-q}):
 *
 *  1. H on the ancilla, then CNOT from the ancilla onto every system qubit.
 *     |0>|j> becomes (|j> + |2M-1-j>)/sqrt2 on the 2M-dimensional index,
 *     the even extension used by the DCT-II.
 *  2. QFT on all N+1 qubits. Output index y carries
 *     e^{-i pi y/2M} cos(pi y (2j+1)/2M) / sqrt(M); for y = M this vanishes.
 *  3. Phase adjustment. R_Z(pi 2^{N-q} / 2M) on system qubit q gives every
 *     system index m the phase e^{i pi m/2M} (times a global factor), and
 *     U_1 = P(-pi/2M) R_Z(-pi (M-1)/2M) on the ancilla cancels that factor on
 *     the |0>_a half and leaves -i on the |1>_a half. Afterwards the
 *     amplitudes of |0>_a|k> and |1>_a|M-k> are both cos(pi k(2j+1)/2M)/sqrt(M).
 *  4. Permutation: decrement the system register by one (mod M) when the
 *     ancilla is set, built from X-conjugated multi-controlled X gates.
 *  5. CNOT ladder again: together with step 4 this maps |1>_a|M-k> to
 *     |1>_a|k>, so both halves now hold the same real vector.
 *  6. U_2 = P(-pi/2) R_Y(-pi/2) on the ancilla folds the pair into
 *     |0>_a with weight sqrt2 (the DCT rows k >= 1); for arbitrary inputs it
 *     leaves the |1>_a half purely imaginary.
 *  7. Row k = 0 has nothing to fold, and step 6 splits it as (1, i)/sqrt2.
 *     R_X(pi/2) on the ancilla, controlled by the system being |0...0>
 *     (X-conjugated), returns it to |0>_a with weight 1.
 *
 * The result restricted to ancilla-0 inputs is the orthonormal DCT-II with
 * the ancilla returned to |0>. qcht_circuit() checks the assembled gate list
 * against the dense oracle before returning it.
 */

#include <cstddef>

#include <Eigen/Dense>

#include "qcheb/sim/circuit.hpp"
#include "qcheb/sim/statevector.hpp"

namespace qcheb::qcht {

struct QChTOracle {
    std::size_t n_qubits = 0; ///< system qubits; matrix acts on n_qubits + 1
    Eigen::MatrixXcd matrix;
};

/**
 * Dense unitary with the DCT-II as its ancilla-0 block. The ancilla-1 block
 * is completed by Gram-Schmidt over the ancilla-1 basis vectors in index
 * order, which yields the identity there. 1 <= N <= 10.
 */
QChTOracle qcht_oracle(std::size_t n_qubits);

/// The gate sequence described above, without the equivalence check.
sim::Circuit build_qcht_circuit(std::size_t n_qubits);

struct VerificationReport {
    std::size_t n_qubits = 0;
    double max_block_deviation = 0.0;  ///< max |circuit - DCT| over the ancilla-0 block
    double max_ancilla_amplitude = 0.0;///< max |amp| on |1>_a for any |0>_a|j> input
    double max_ancilla_weight = 0.0;   ///< max total |1>_a probability for any input
    double tolerance = 0.0;

    bool passed() const noexcept {
        return max_block_deviation < tolerance && max_ancilla_amplitude < tolerance &&
               max_ancilla_weight < tolerance;
    }
};

/// Compares `circuit` (N+1 qubits) with the DCT-II block and checks ancilla cleanliness.
VerificationReport verify_qcht_circuit(const sim::Circuit &circuit, std::size_t n_qubits,
                                       double tolerance = 1e-9);

/// build_qcht_circuit + verification; VerificationError if the check fails. 1 <= N <= 8.
sim::Circuit qcht_circuit(std::size_t n_qubits);

/// Runs the transform (or its adjoint) on an (N+1)-qubit state.
sim::Statevector apply_qcht(sim::Statevector state, bool inverse = false);

/**
 * Re-expresses N-qubit Chebyshev coefficients on an N_target-qubit register.
 * Coefficient k is rescaled by tau_weight(N, k) / tau_weight(N_target, k) so
 * the represented function keeps its shape; degrees >= 2^N are zero and the
 * result is renormalized. UsageError if target <= N.
 */
sim::Statevector extend_register(const sim::Statevector &state, std::size_t n_target);

} // namespace qcheb::qcht
