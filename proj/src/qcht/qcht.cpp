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
#include "qcheb/qcht.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "qcheb/chebmath.hpp"
#include "qcheb/errors.hpp"

namespace qcheb::qcht {

namespace {

using sim::Complex;
constexpr double kPi = std::numbers::pi;

void check_range(std::size_t n, std::size_t hi, const char *what) {
    if (n < 1 || n > hi) {
        throw ConfigError(std::string(what) + ": qubit count " + std::to_string(n) +
                          " outside [1, " + std::to_string(hi) + "]");
    }
}

void cnot_ladder(sim::Circuit &c, std::size_t n) {
    for (std::size_t q = 1; q <= n; ++q) {
        c.cnot(0, q);
    }
}

// |1>_a|m> -> |1>_a|m-1 mod M>. Processing from the most significant bit
// down, bit q flips exactly when every less significant bit is zero.
void controlled_decrement(sim::Circuit &c, std::size_t n) {
    for (std::size_t q = 1; q <= n; ++q) {
        std::vector<std::size_t> ctrls{0};
        for (std::size_t low = q + 1; low <= n; ++low) {
            c.x(low);
            ctrls.push_back(low);
        }
        c.add(sim::gates::x(q).controlled_by(ctrls));
        for (std::size_t low = q + 1; low <= n; ++low) {
            c.x(low);
        }
    }
}

} // namespace

QChTOracle qcht_oracle(std::size_t n_qubits) {
    check_range(n_qubits, 10, "qcht_oracle");
    const auto m = static_cast<Eigen::Index>(std::size_t{1} << n_qubits);
    const Eigen::Index dim = 2 * m;

    Eigen::MatrixXcd q = Eigen::MatrixXcd::Zero(dim, dim);
    q.topLeftCorner(m, m) = cheb::dct2_matrix(n_qubits).cast<Complex>();

    // Gram-Schmidt over candidate basis vectors, ancilla-1 half first.
    Eigen::Index filled = m;
    for (Eigen::Index pass = 0; pass < 2 && filled < dim; ++pass) {
        const Eigen::Index begin = pass == 0 ? m : 0;
        const Eigen::Index end = pass == 0 ? dim : m;
        for (Eigen::Index i = begin; i < end && filled < dim; ++i) {
            Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim);
            v(i) = 1.0;
            for (Eigen::Index c = 0; c < filled; ++c) {
                const Complex coef = std::conj(q(i, c));
                if (coef != Complex{0.0}) {
                    v -= coef * q.col(c);
                }
            }
            const double norm = v.norm();
            if (norm > 1e-8) {
                q.col(filled++) = v / norm;
            }
        }
    }
    if (filled != dim) {
        throw VerificationError("unitary completion of the transform oracle failed");
    }
    return {n_qubits, std::move(q)};
}

sim::Circuit build_qcht_circuit(std::size_t n_qubits) {
    check_range(n_qubits, 10, "qcht circuit");
    const std::size_t n = n_qubits;
    const std::size_t width = n + 1;
    const double m = std::ldexp(1.0, static_cast<int>(n));
    sim::Circuit c(width);

    c.h(0);
    cnot_ladder(c, n);

    c.append(sim::qft_circuit(width));

    c.rz(0, -kPi * (m - 1.0) / (2.0 * m));
    c.p(0, -kPi / (2.0 * m));
    for (std::size_t q = 1; q <= n; ++q) {
        const double weight = std::ldexp(1.0, static_cast<int>(n - q));
        c.rz(q, kPi * weight / (2.0 * m));
    }

    controlled_decrement(c, n);
    cnot_ladder(c, n);

    c.ry(0, -kPi / 2.0);
    c.p(0, -kPi / 2.0);

    std::vector<std::size_t> system;
    for (std::size_t q = 1; q <= n; ++q) {
        system.push_back(q);
        c.x(q);
    }
    c.add(sim::gates::rx(0, kPi / 2.0).controlled_by(system));
    for (auto q : system) {
        c.x(q);
    }
    return c;
}

VerificationReport verify_qcht_circuit(const sim::Circuit &circuit, std::size_t n_qubits,
                                       double tolerance) {
    if (circuit.n_qubits() != n_qubits + 1) {
        throw UsageError("transform circuit width does not match N + 1");
    }
    const Eigen::MatrixXd dct = cheb::dct2_matrix(n_qubits);
    const std::size_t m = std::size_t{1} << n_qubits;

    VerificationReport report;
    report.n_qubits = n_qubits;
    report.tolerance = tolerance;
    for (std::size_t j = 0; j < m; ++j) {
        std::vector<Complex> basis(2 * m, Complex{0.0});
        basis[j] = 1.0;
        auto s = sim::Statevector::from_amplitudes(std::move(basis));
        s.apply(circuit);
        double leak = 0.0;
        for (std::size_t k = 0; k < m; ++k) {
            const double dev = std::abs(s[k] - dct(static_cast<Eigen::Index>(k),
                                                   static_cast<Eigen::Index>(j)));
            report.max_block_deviation = std::max(report.max_block_deviation, dev);
            report.max_ancilla_amplitude = std::max(report.max_ancilla_amplitude, std::abs(s[m + k]));
            leak += std::norm(s[m + k]);
        }
        report.max_ancilla_weight = std::max(report.max_ancilla_weight, leak);
    }
    return report;
}

sim::Circuit qcht_circuit(std::size_t n_qubits) {
    check_range(n_qubits, 8, "qcht_circuit");
    auto circuit = build_qcht_circuit(n_qubits);
    const auto report = verify_qcht_circuit(circuit, n_qubits);
    if (!report.passed()) {
        throw VerificationError("transform circuit for N=" + std::to_string(n_qubits) +
                                " deviates from the DCT-II oracle by " +
                                std::to_string(report.max_block_deviation));
    }
    return circuit;
}

sim::Statevector apply_qcht(sim::Statevector state, bool inverse) {
    if (state.n_qubits() < 2) {
        throw UsageError("transform needs an ancilla plus at least one system qubit");
    }
    const auto circuit = qcht_circuit(state.n_qubits() - 1);
    state.apply(inverse ? circuit.adjoint() : circuit);
    return state;
}

sim::Statevector extend_register(const sim::Statevector &state, std::size_t n_target) {
    const std::size_t n = state.n_qubits();
    if (n_target <= n) {
        throw UsageError("extension target " + std::to_string(n_target) +
                         " must exceed the source register size " + std::to_string(n));
    }
    if (n_target > 16) {
        throw ConfigError("extension target above 16 qubits");
    }
    std::vector<Complex> out(std::size_t{1} << n_target, Complex{0.0});
    for (std::size_t k = 0; k < state.size(); ++k) {
        out[k] = state[k] * (cheb::tau_weight(n, k) / cheb::tau_weight(n_target, k));
    }
    auto extended = sim::Statevector::from_amplitudes(std::move(out));
    extended.normalize();
    return extended;
}

} // namespace qcheb::qcht
