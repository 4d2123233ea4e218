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
#include <string>
#include <vector>

#include "qcheb/sim/types.hpp"

namespace qcheb::sim {

enum class GateKind {
    H,
    X,
    P,      ///< diag{1, e^{i angle}}
    PTilde, ///< scaled phase diag{1, exp(i s 2^N arccos(x) / l)}
    RX,
    RY,
    RZ,
    CNOT, ///< X on targets[0] with at least one control
    SWAP, ///< exchanges targets[0] and targets[1]
    Matrix,
};

std::string to_string(GateKind kind);

/// Parameters of the scaled phase gate P~^[s]_l(x).
struct ScaledPhase {
    double scale = 1.0;        ///< s
    double divisor = 1.0;      ///< l
    double x = 0.0;            ///< embedded variable, |x| <= 1
    std::size_t reg_bits = 1;  ///< N in the 2^N prefactor

    /// Phase applied to |1>: s 2^N arccos(x) / l.
    double phase() const;
};

/**
 * One circuit element. Every kind except SWAP acts as a 2x2 matrix on
 * `targets[0]`; `controls` (any number, all must be |1>) condition it.
 */
struct Gate {
    GateKind kind = GateKind::H;
    std::vector<std::size_t> targets;
    std::vector<std::size_t> controls;
    double angle = 0.0;
    ScaledPhase scaled{};
    Matrix2 custom{};

    /// 2x2 action on the target. Throws UsageError for SWAP.
    Matrix2 matrix() const;

    /// Hermitian conjugate with the same wiring.
    Gate adjoint() const;

    /// Validates wiring against an `n`-qubit register (UsageError on failure).
    void validate(std::size_t n_qubits) const;

    Gate &controlled_by(std::vector<std::size_t> ctrls);
};

namespace gates {

Gate h(std::size_t q);
Gate x(std::size_t q);
Gate p(std::size_t q, double phi);
Gate ptilde(std::size_t q, double s, double l, double x, std::size_t reg_bits);
Gate rx(std::size_t q, double theta);
Gate ry(std::size_t q, double theta);
Gate rz(std::size_t q, double theta);
Gate cnot(std::size_t control, std::size_t target);
Gate swap(std::size_t a, std::size_t b);
Gate matrix(std::size_t q, const Matrix2 &m);

Matrix2 h_matrix();
Matrix2 x_matrix();
Matrix2 p_matrix(double phi);
Matrix2 rx_matrix(double theta);
Matrix2 ry_matrix(double theta);
Matrix2 rz_matrix(double theta);

} // namespace gates

} // namespace qcheb::sim
