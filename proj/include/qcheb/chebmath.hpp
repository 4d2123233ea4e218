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
 * @file chebmath.hpp
 * Analytic Chebyshev machinery behind the feature map and the transform.
 *
 * Conventions. For an N-qubit register with M = 2^N basis states:
 *   nodes      x_j = cos(pi (2j+1) / 2^{N+1}),       j = 0..M-1 (decreasing)
 *   tau(x)_0   = T_0(x) / 2^{N/2}
 *   tau(x)_k   = T_k(x) / 2^{(N-1)/2},               k = 1..M-1
 * The tau-states are orthonormal at the nodes and the node-to-tau map is the
 * orthogonal type-II DCT matrix (column j holds tau(x_j)).
 */

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace qcheb::cheb {

/// Node grid of an N-qubit register; nodes[j] strictly decreases in j.
struct ChebyshevGrid {
    std::size_t n_qubits = 0;
    std::vector<double> nodes;

    std::size_t size() const noexcept { return nodes.size(); }
    double operator[](std::size_t j) const { return nodes[j]; }
};

/// Unnormalized tau(x) coefficients together with N(x) = ||tau(x)||.
struct TauState {
    std::size_t n_qubits = 0;
    double x = 0.0;
    std::vector<double> coefficients;
    double norm = 0.0;

    /// coefficients / norm
    std::vector<double> normalized() const;
};

/// Dense operator with G * tau(x) = tau'(x) for every x.
struct GEffMatrix {
    std::size_t n_qubits = 0;
    Eigen::MatrixXd entries;

    std::vector<double> apply(std::span<const double> coeffs) const;
};

/// T_k(x) by the three-term recurrence. DomainError if |x| > 1.
double chebyshev_T(std::size_t k, double x);

/// T_0(x) .. T_{count-1}(x).
std::vector<double> chebyshev_T_all(std::size_t count, double x);

/// T_k'(x) = k U_{k-1}(x), second-kind recurrence.
double chebyshev_T_prime(std::size_t k, double x);

/// T_0'(x) .. T_{count-1}'(x).
std::vector<double> chebyshev_T_prime_all(std::size_t count, double x);

/// Weight of coefficient k in tau(x): 2^{-N/2} for k = 0, 2^{-(N-1)/2} otherwise.
double tau_weight(std::size_t n_qubits, std::size_t k);

double chebyshev_node(std::size_t n_qubits, std::size_t j);

/// Grid for 1 <= N <= 12.
ChebyshevGrid chebyshev_nodes(std::size_t n_qubits);

/// Node index j with |x_j - x| < 1e-12, or -1.
long node_index(std::size_t n_qubits, double x);

TauState tau_state(std::size_t n_qubits, double x);

/// N(x) in closed form: 2^{-(N-1)/2} sqrt(1/2 + sum_{j>=1} T_j(x)^2).
double tau_norm(std::size_t n_qubits, double x);

/// sum_j T_k(x_j) T_l(x_j) over the N-qubit grid; UsageError if k or l >= 2^N.
double orthogonality_sum(std::size_t n_qubits, std::size_t k, std::size_t l);

/// |<tau(x')|tau(x)>|^2 by explicit summation (any x', x in [-1, 1]).
double overlap_sq_direct(std::size_t n_qubits, double x_prime, double x);

/**
 * Closed-form squared overlap for a node x' (Christoffel-Darboux):
 *
 *   (T_{M+1}(x') T_M(x) - T_M(x') T_{M+1}(x))^2 / (M^2 (x' - x)^2)
 *
 * The expression is 0/0 at x = x'; for |x - x'| < 1e-12 the direct sum is
 * returned instead. UsageError if x' is not a node.
 */
double overlap_sq_formula(std::size_t n_qubits, double x_prime, double x);

/// True when overlap_sq_formula takes the direct-sum branch for (x', x).
bool overlap_uses_direct_branch(double x_prime, double x) noexcept;

/**
 * Orthonormal DCT-II, 1 <= N <= 10:
 *   D[k][j] = 2^{-(N-1)/2} c_k cos(k (j + 1/2) pi / 2^N),  c_0 = 1/sqrt2, c_k = 1.
 */
Eigen::MatrixXd dct2_matrix(std::size_t n_qubits);

/// tau'(x): T_k'(x) scaled by the same weights as tau(x).
std::vector<double> tau_derivative_coeffs(std::size_t n_qubits, double x);

/**
 * Derivative operator on tau coefficients, built from the lower-degree
 * expansions
 *   T_{2n}'   = 4n sum_{m=1..n} T_{2m-1}
 *   T_{2n+1}' = (4n+2) sum_{m=1..n} T_{2m} + (2n+1) T_0.
 * Stored with the usual matrix-vector convention (row = output degree), so
 * row 0 is zero and the support is strictly below the diagonal. Entries in
 * column 0 carry an extra sqrt2 from the smaller k=0 weight. 1 <= N <= 10.
 */
GEffMatrix g_eff_matrix(std::size_t n_qubits);

} // namespace qcheb::cheb
