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

#include "qcheb/encodings.hpp"
#include "qcheb/sim/circuit.hpp"
#include "qcheb/sim/statevector.hpp"

namespace qcheb::dqgm {

/**
 * Hardware-efficient ansatz layout. Each of the `depth` layers applies
 * R_Y then R_Z to every qubit followed by a CNOT chain 0->1->...->N-1; a final
 * R_Y/R_Z layer closes the circuit. Parameters are ordered layer-major, then
 * by qubit, then (R_Y, R_Z): theta[2 (layer N + q) + r].
 */
struct AnsatzSpec {
    std::size_t n_qubits = 1;
    std::size_t depth = 1;

    static constexpr std::size_t kRotationsPerQubit = 2;

    std::size_t parameter_count() const noexcept {
        return n_qubits * (depth + 1) * kRotationsPerQubit;
    }

    /// ConfigError for N outside [1, 10] or depth outside [1, 1000].
    void validate() const;
};

/// Variational angles plus the layout and the feature map they are read out with.
struct ModelParams {
    std::vector<double> theta;
    AnsatzSpec ansatz;
    enc::MapKind map = enc::MapKind::chebyshev;

    /// UsageError on length mismatch or non-finite entries.
    void validate() const;
};

sim::Circuit hea_circuit(const ModelParams &params);

/// psi_theta = V_theta |0...0>, simulated without building a Circuit.
sim::Statevector model_state(const ModelParams &params);
sim::Statevector model_state(const AnsatzSpec &ansatz, std::span<const double> theta);

/// Feature vector f(x) with p(x) = |<f(x)|psi>|^2: tau(x) or the phase state.
std::vector<sim::Complex> feature_vector(enc::MapKind map, std::size_t n_qubits, double x);

/// Readout of an already prepared model state.
double prob_from_state(enc::MapKind map, const sim::Statevector &psi, double x);

/// dp/dx from the tau' (or phase-derivative) feature vector.
double prob_dx_from_state(enc::MapKind map, const sim::Statevector &psi, double x);

/// dp/dx for the Chebyshev map with tau'(x) obtained as G_eff tau(x).
double prob_dx_geff_from_state(const sim::Statevector &psi, double x);

/// p_theta(x) = |<tau(x)|psi_theta>|^2 (or the phase-map analogue); no shots.
double model_prob(const ModelParams &params, double x);

double model_prob_dx(const ModelParams &params, double x);

/// Chebyshev models only: derivative through the G_eff matrix.
double model_prob_dx_geff(const ModelParams &params, double x);

/// Domain of x accepted for the given feature map (DomainError otherwise).
void check_model_domain(enc::MapKind map, double x);

} // namespace qcheb::dqgm
