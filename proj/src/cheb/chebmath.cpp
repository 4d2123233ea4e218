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
#include "qcheb/chebmath.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qcheb/errors.hpp"

namespace qcheb::cheb {

namespace {

constexpr std::size_t kMaxTauQubits = 16;
constexpr double kSamePointTol = 1e-12;

void check_domain(double x) {
    if (!(std::abs(x) <= 1.0)) {
        throw DomainError("Chebyshev argument " + std::to_string(x) + " outside [-1, 1]");
    }
}

void check_qubits(std::size_t n, std::size_t lo, std::size_t hi, const char *what) {
    if (n < lo || n > hi) {
        throw ConfigError(std::string(what) + ": qubit count " + std::to_string(n) +
                          " outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
}

std::size_t dim(std::size_t n) { return std::size_t{1} << n; }

} // namespace

std::vector<double> TauState::normalized() const {
    std::vector<double> out(coefficients);
    for (auto &c : out) {
        c /= norm;
    }
    return out;
}

std::vector<double> GEffMatrix::apply(std::span<const double> coeffs) const {
    Eigen::Map<const Eigen::VectorXd> v(coeffs.data(), static_cast<Eigen::Index>(coeffs.size()));
    Eigen::VectorXd r = entries * v;
    return {r.data(), r.data() + r.size()};
}

double chebyshev_T(std::size_t k, double x) {
    check_domain(x);
    if (k == 0) {
        return 1.0;
    }
    double prev = 1.0;
    double cur = x;
    for (std::size_t i = 1; i < k; ++i) {
        const double next = 2.0 * x * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

std::vector<double> chebyshev_T_all(std::size_t count, double x) {
    check_domain(x);
    std::vector<double> t(count);
    if (count > 0) {
        t[0] = 1.0;
    }
    if (count > 1) {
        t[1] = x;
    }
    for (std::size_t k = 2; k < count; ++k) {
        t[k] = 2.0 * x * t[k - 1] - t[k - 2];
    }
    return t;
}

double chebyshev_T_prime(std::size_t k, double x) {
    check_domain(x);
    if (k == 0) {
        return 0.0;
    }
    // U_{k-1}
    double prev = 1.0;    // U_0
    double cur = 2.0 * x; // U_1
    if (k == 1) {
        return 1.0;
    }
    for (std::size_t i = 2; i < k; ++i) {
        const double next = 2.0 * x * cur - prev;
        prev = cur;
        cur = next;
    }
    return static_cast<double>(k) * cur;
}

std::vector<double> chebyshev_T_prime_all(std::size_t count, double x) {
    check_domain(x);
    std::vector<double> d(count, 0.0);
    double u_prev = 0.0; // U_{-1}
    double u_cur = 1.0;  // U_0
    for (std::size_t k = 1; k < count; ++k) {
        d[k] = static_cast<double>(k) * u_cur;
        const double next = 2.0 * x * u_cur - u_prev;
        u_prev = u_cur;
        u_cur = next;
    }
    return d;
}

double tau_weight(std::size_t n_qubits, std::size_t k) {
    const double n = static_cast<double>(n_qubits);
    return k == 0 ? std::pow(2.0, -n / 2.0) : std::pow(2.0, -(n - 1.0) / 2.0);
}

double chebyshev_node(std::size_t n_qubits, std::size_t j) {
    const double denom = std::ldexp(1.0, static_cast<int>(n_qubits) + 1);
    return std::cos(std::numbers::pi * static_cast<double>(2 * j + 1) / denom);
}

ChebyshevGrid chebyshev_nodes(std::size_t n_qubits) {
    check_qubits(n_qubits, 1, 12, "chebyshev_nodes");
    ChebyshevGrid grid;
    grid.n_qubits = n_qubits;
    grid.nodes.resize(dim(n_qubits));
    for (std::size_t j = 0; j < grid.nodes.size(); ++j) {
        grid.nodes[j] = chebyshev_node(n_qubits, j);
    }
    return grid;
}

long node_index(std::size_t n_qubits, double x) {
    if (!(std::abs(x) <= 1.0)) {
        return -1;
    }
    const double scaled = std::acos(x) * std::ldexp(1.0, static_cast<int>(n_qubits) + 1) /
                          std::numbers::pi;
    const double j = std::round((scaled - 1.0) / 2.0);
    if (j < 0.0 || j >= static_cast<double>(dim(n_qubits))) {
        return -1;
    }
    const auto idx = static_cast<std::size_t>(j);
    return std::abs(chebyshev_node(n_qubits, idx) - x) < kSamePointTol ? static_cast<long>(idx)
                                                                        : -1;
}

TauState tau_state(std::size_t n_qubits, double x) {
    check_qubits(n_qubits, 1, kMaxTauQubits, "tau_state");
    TauState tau;
    tau.n_qubits = n_qubits;
    tau.x = x;
    tau.coefficients = chebyshev_T_all(dim(n_qubits), x);
    const double w0 = tau_weight(n_qubits, 0);
    const double w = tau_weight(n_qubits, 1);
    tau.coefficients[0] *= w0;
    double acc = 0.0;
    for (std::size_t k = 0; k < tau.coefficients.size(); ++k) {
        if (k > 0) {
            tau.coefficients[k] *= w;
        }
        acc += tau.coefficients[k] * tau.coefficients[k];
    }
    tau.norm = std::sqrt(acc);
    return tau;
}

double tau_norm(std::size_t n_qubits, double x) {
    check_qubits(n_qubits, 1, kMaxTauQubits, "tau_norm");
    const auto t = chebyshev_T_all(dim(n_qubits), x);
    double acc = 0.5;
    for (std::size_t j = 1; j < t.size(); ++j) {
        acc += t[j] * t[j];
    }
    return std::sqrt(acc) * std::pow(2.0, -(static_cast<double>(n_qubits) - 1.0) / 2.0);
}

double orthogonality_sum(std::size_t n_qubits, std::size_t k, std::size_t l) {
    check_qubits(n_qubits, 1, 12, "orthogonality_sum");
    if (k >= dim(n_qubits) || l >= dim(n_qubits)) {
        throw UsageError("degree must be below 2^N for the discrete orthogonality relation");
    }
    double acc = 0.0;
    for (std::size_t j = 0; j < dim(n_qubits); ++j) {
        const double x = chebyshev_node(n_qubits, j);
        acc += chebyshev_T(k, x) * chebyshev_T(l, x);
    }
    return acc;
}

double overlap_sq_direct(std::size_t n_qubits, double x_prime, double x) {
    const auto a = tau_state(n_qubits, x_prime);
    const auto b = tau_state(n_qubits, x);
    double ip = 0.0;
    for (std::size_t k = 0; k < a.coefficients.size(); ++k) {
        ip += a.coefficients[k] * b.coefficients[k];
    }
    return ip * ip;
}

bool overlap_uses_direct_branch(double x_prime, double x) noexcept {
    return std::abs(x - x_prime) < kSamePointTol;
}

double overlap_sq_formula(std::size_t n_qubits, double x_prime, double x) {
    check_qubits(n_qubits, 1, 12, "overlap_sq_formula");
    check_domain(x);
    if (node_index(n_qubits, x_prime) < 0) {
        throw UsageError("closed-form overlap needs x' on the Chebyshev grid");
    }
    if (overlap_uses_direct_branch(x_prime, x)) {
        return overlap_sq_direct(n_qubits, x_prime, x);
    }
    const std::size_t m = dim(n_qubits);
    const double num = chebyshev_T(m + 1, x_prime) * chebyshev_T(m, x) -
                       chebyshev_T(m, x_prime) * chebyshev_T(m + 1, x);
    const double md = static_cast<double>(m);
    const double dx = x_prime - x;
    return (num * num) / (md * md * dx * dx);
}

Eigen::MatrixXd dct2_matrix(std::size_t n_qubits) {
    check_qubits(n_qubits, 1, 10, "dct2_matrix");
    const auto m = static_cast<Eigen::Index>(dim(n_qubits));
    const double scale = std::pow(2.0, -(static_cast<double>(n_qubits) - 1.0) / 2.0);
    Eigen::MatrixXd d(m, m);
    for (Eigen::Index k = 0; k < m; ++k) {
        const double ck = k == 0 ? 1.0 / std::numbers::sqrt2 : 1.0;
        for (Eigen::Index j = 0; j < m; ++j) {
            d(k, j) = scale * ck *
                      std::cos(static_cast<double>(k) * (static_cast<double>(j) + 0.5) *
                               std::numbers::pi / static_cast<double>(m));
        }
    }
    return d;
}

std::vector<double> tau_derivative_coeffs(std::size_t n_qubits, double x) {
    check_qubits(n_qubits, 1, kMaxTauQubits, "tau_derivative_coeffs");
    auto d = chebyshev_T_prime_all(dim(n_qubits), x);
    const double w = tau_weight(n_qubits, 1);
    for (std::size_t k = 1; k < d.size(); ++k) {
        d[k] *= w;
    }
    return d;
}

GEffMatrix g_eff_matrix(std::size_t n_qubits) {
    check_qubits(n_qubits, 1, 10, "g_eff_matrix");
    const auto m = static_cast<Eigen::Index>(dim(n_qubits));
    GEffMatrix g;
    g.n_qubits = n_qubits;
    g.entries = Eigen::MatrixXd::Zero(m, m);
    for (Eigen::Index k = 1; k < m; ++k) {
        const Eigen::Index n = k / 2;
        if (k % 2 == 0) {
            for (Eigen::Index mm = 1; mm <= n; ++mm) {
                g.entries(k, 2 * mm - 1) = 4.0 * static_cast<double>(n);
            }
        } else {
            for (Eigen::Index mm = 1; mm <= n; ++mm) {
                g.entries(k, 2 * mm) = 4.0 * static_cast<double>(n) + 2.0;
            }
            g.entries(k, 0) = std::numbers::sqrt2 * (2.0 * static_cast<double>(n) + 1.0);
        }
    }
    return g;
}

} // namespace qcheb::cheb
