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
#include "qcheb/dqgm/model.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qcheb/chebmath.hpp"
#include "qcheb/errors.hpp"
#include "qcheb/sim/kernels.hpp"

namespace qcheb::dqgm {

using sim::Complex;

void AnsatzSpec::validate() const {
    if (n_qubits < 1 || n_qubits > 10) {
        throw ConfigError("ansatz qubit count " + std::to_string(n_qubits) + " outside [1, 10]");
    }
    if (depth < 1 || depth > 1000) {
        throw ConfigError("ansatz depth " + std::to_string(depth) + " outside [1, 1000]");
    }
}

void ModelParams::validate() const {
    ansatz.validate();
    if (theta.size() != ansatz.parameter_count()) {
        throw UsageError("ansatz expects " + std::to_string(ansatz.parameter_count()) +
                         " angles, got " + std::to_string(theta.size()));
    }
    for (double t : theta) {
        if (!std::isfinite(t)) {
            throw UsageError("non-finite ansatz angle");
        }
    }
}

sim::Circuit hea_circuit(const ModelParams &params) {
    params.validate();
    const auto &a = params.ansatz;
    sim::Circuit c(a.n_qubits);
    std::size_t idx = 0;
    for (std::size_t layer = 0; layer <= a.depth; ++layer) {
        for (std::size_t q = 0; q < a.n_qubits; ++q) {
            c.ry(q, params.theta[idx++]);
            c.rz(q, params.theta[idx++]);
        }
        if (layer == a.depth) {
            break;
        }
        for (std::size_t q = 0; q + 1 < a.n_qubits; ++q) {
            c.cnot(q, q + 1);
        }
    }
    return c;
}

sim::Statevector model_state(const AnsatzSpec &ansatz, std::span<const double> theta) {
    sim::Statevector psi(ansatz.n_qubits);
    auto amps = psi.amplitudes();
    const std::size_t n = ansatz.n_qubits;
    const auto x = sim::gates::x_matrix();
    std::size_t idx = 0;
    for (std::size_t layer = 0; layer <= ansatz.depth; ++layer) {
        for (std::size_t q = 0; q < n; ++q) {
            const auto ry = sim::gates::ry_matrix(theta[idx++]);
            const auto rz = sim::gates::rz_matrix(theta[idx++]);
            // R_Z R_Y as one matrix; R_Z is diagonal
            const sim::Matrix2 fused{rz[0] * ry[0], rz[0] * ry[1], rz[3] * ry[2], rz[3] * ry[3]};
            sim::kernels::omp::apply_1q(amps, n, q, {}, fused);
        }
        if (layer == ansatz.depth) {
            break;
        }
        for (std::size_t q = 0; q + 1 < n; ++q) {
            const std::size_t ctrl[1] = {q};
            sim::kernels::omp::apply_1q(amps, n, q + 1, ctrl, x);
        }
    }
    return psi;
}

sim::Statevector model_state(const ModelParams &params) {
    params.validate();
    return model_state(params.ansatz, params.theta);
}

void check_model_domain(enc::MapKind map, double x) {
    if (map == enc::MapKind::chebyshev && !(std::abs(x) <= 1.0)) {
        throw DomainError("Chebyshev model evaluated outside [-1, 1]");
    }
    if (map == enc::MapKind::phase && !(x >= 0.0 && x < 1.0)) {
        throw DomainError("phase model evaluated outside [0, 1)");
    }
}

std::vector<Complex> feature_vector(enc::MapKind map, std::size_t n_qubits, double x) {
    check_model_domain(map, x);
    if (map == enc::MapKind::phase) {
        return enc::phase_state(n_qubits, x);
    }
    const auto tau = cheb::tau_state(n_qubits, x);
    return {tau.coefficients.begin(), tau.coefficients.end()};
}

namespace {

Complex overlap(std::span<const Complex> f, const sim::Statevector &psi) {
    Complex acc{0.0};
    for (std::size_t k = 0; k < f.size(); ++k) {
        acc += std::conj(f[k]) * psi[k];
    }
    return acc;
}

Complex overlap(std::span<const double> f, const sim::Statevector &psi) {
    Complex acc{0.0};
    for (std::size_t k = 0; k < f.size(); ++k) {
        acc += f[k] * psi[k];
    }
    return acc;
}

} // namespace

double prob_from_state(enc::MapKind map, const sim::Statevector &psi, double x) {
    const auto f = feature_vector(map, psi.n_qubits(), x);
    return std::norm(overlap(f, psi));
}

double prob_dx_from_state(enc::MapKind map, const sim::Statevector &psi, double x) {
    const std::size_t n = psi.n_qubits();
    const auto f = feature_vector(map, n, x);
    const Complex a = overlap(f, psi);
    Complex b{0.0};
    if (map == enc::MapKind::chebyshev) {
        b = overlap(std::span<const double>(cheb::tau_derivative_coeffs(n, x)), psi);
    } else {
        // d/dx <phi(x)|psi> = sum_k (-2 pi i k) conj(phi_k) psi_k
        for (std::size_t k = 0; k < f.size(); ++k) {
            const Complex dk{0.0, -2.0 * std::numbers::pi * static_cast<double>(k)};
            b += dk * std::conj(f[k]) * psi[k];
        }
    }
    return 2.0 * (std::conj(a) * b).real();
}

double prob_dx_geff_from_state(const sim::Statevector &psi, double x) {
    const std::size_t n = psi.n_qubits();
    const auto tau = cheb::tau_state(n, x);
    const auto dtau = cheb::g_eff_matrix(n).apply(tau.coefficients);
    const Complex a = overlap(std::span<const double>(tau.coefficients), psi);
    const Complex b = overlap(std::span<const double>(dtau), psi);
    return 2.0 * (std::conj(a) * b).real();
}

double model_prob(const ModelParams &params, double x) {
    check_model_domain(params.map, x);
    return prob_from_state(params.map, model_state(params), x);
}

double model_prob_dx(const ModelParams &params, double x) {
    check_model_domain(params.map, x);
    return prob_dx_from_state(params.map, model_state(params), x);
}

double model_prob_dx_geff(const ModelParams &params, double x) {
    if (params.map != enc::MapKind::chebyshev) {
        throw UsageError("G_eff derivative applies to Chebyshev models only");
    }
    check_model_domain(params.map, x);
    return prob_dx_geff_from_state(model_state(params), x);
}

} // namespace qcheb::dqgm
