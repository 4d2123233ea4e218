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
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "helpers.hpp"
#include "qcheb/errors.hpp"
#include "qcheb/sim/circuit.hpp"
#include "qcheb/sim/sampling.hpp"

using namespace qcheb;
using namespace qcheb::sim;

namespace {
constexpr double kInvSqrt2 = 0.70710678118654752440;
}

TEST_SUITE("simcore") {

TEST_CASE("zero_state has a single unit amplitude") {
    for (std::size_t n : {1u, 2u, 3u}) {
        const auto s = zero_state(n);
        REQUIRE(s.size() == (std::size_t{1} << n));
        CHECK(s[0] == Complex{1.0, 0.0});
        for (std::size_t i = 1; i < s.size(); ++i) {
            CHECK(s[i] == Complex{0.0, 0.0});
        }
    }
    CHECK_THROWS_AS(zero_state(0), ConfigError);
    CHECK_THROWS_AS(zero_state(25), ConfigError);
}

TEST_CASE("single-gate examples") {
    auto h = apply_gate(zero_state(1), gates::h(0));
    CHECK(std::abs(h[0] - kInvSqrt2) < 1e-15);
    CHECK(std::abs(h[1] - kInvSqrt2) < 1e-15);

    auto x = apply_gate(zero_state(1), gates::x(0));
    CHECK(x[0] == Complex{0.0});
    CHECK(x[1] == Complex{1.0});

    auto p = apply_gate(h, gates::p(0, std::numbers::pi / 2));
    CHECK(std::abs(p[0] - kInvSqrt2) < 1e-15);
    CHECK(std::abs(p[1] - Complex{0.0, kInvSqrt2}) < 1e-15);

    CHECK_THROWS_AS(apply_gate(zero_state(2), gates::x(2)), UsageError);
    CHECK_THROWS_AS(apply_gate(zero_state(2), gates::cnot(1, 1)), UsageError);
}

TEST_CASE("qubit 0 is the most significant bit") {
    auto s = apply_gate(zero_state(3), gates::x(0));
    CHECK(s[4] == Complex{1.0});
    s = apply_gate(zero_state(3), gates::x(2));
    CHECK(s[1] == Complex{1.0});
}

TEST_CASE("rotation conventions") {
    const double t = 0.731;
    const auto ry = gates::ry_matrix(t);
    CHECK(std::abs(ry[1] + std::sin(t / 2)) < 1e-15);
    CHECK(std::abs(ry[2] - std::sin(t / 2)) < 1e-15);
    const auto rz = gates::rz_matrix(t);
    CHECK(std::abs(rz[0] - std::polar(1.0, -t / 2)) < 1e-15);
    CHECK(std::abs(rz[3] - std::polar(1.0, t / 2)) < 1e-15);
    const auto rx = gates::rx_matrix(t);
    CHECK(std::abs(rx[1] - Complex{0.0, -std::sin(t / 2)}) < 1e-15);
}

TEST_CASE("every gate matrix is unitary") {
    Rng rng(11);
    const std::vector<Gate> gs{gates::h(0),
                               gates::x(0),
                               gates::p(0, rng.uniform(-4, 4)),
                               gates::ptilde(0, -2.0, 4.0, rng.uniform(-1, 1), 3),
                               gates::rx(0, rng.uniform(-4, 4)),
                               gates::ry(0, rng.uniform(-4, 4)),
                               gates::rz(0, rng.uniform(-4, 4))};
    for (const auto &g : gs) {
        const auto m = g.matrix();
        const Complex a = std::conj(m[0]) * m[0] + std::conj(m[2]) * m[2];
        const Complex b = std::conj(m[0]) * m[1] + std::conj(m[2]) * m[3];
        const Complex d = std::conj(m[1]) * m[1] + std::conj(m[3]) * m[3];
        CHECK(std::abs(a - 1.0) < 1e-12);
        CHECK(std::abs(b) < 1e-12);
        CHECK(std::abs(d - 1.0) < 1e-12);
    }
    CHECK_THROWS_AS(gates::ptilde(0, 1.0, 1.0, 1.5, 2), DomainError);
}

TEST_CASE("circuit examples") {
    Circuit empty(2);
    Rng rng(3);
    const auto psi = qcheb::testing::random_state(2, rng);
    CHECK(qcheb::testing::max_abs_diff(apply_circuit(psi, empty), psi) == 0.0);

    Circuit hh(1);
    hh.h(0).h(0);
    const auto back = apply_circuit(zero_state(1), hh);
    CHECK(std::abs(back[0] - 1.0) < 1e-15);
    CHECK(std::abs(back[1]) < 1e-15);

    Circuit bell(2);
    bell.h(0).cnot(0, 1);
    const auto b = apply_circuit(zero_state(2), bell);
    CHECK(std::abs(b[0] - kInvSqrt2) < 1e-15);
    CHECK(std::abs(b[3] - kInvSqrt2) < 1e-15);
    CHECK(std::abs(b[1]) + std::abs(b[2]) < 1e-15);

    CHECK_THROWS_AS(apply_circuit(zero_state(3), bell), UsageError);
}

TEST_CASE("QFT examples") {
    const auto m1 = circuit_matrix(qft_circuit(1));
    CHECK(std::abs(m1(0, 0) - kInvSqrt2) < 1e-15);
    CHECK(std::abs(m1(1, 1) + kInvSqrt2) < 1e-15);

    const auto m2 = circuit_matrix(qft_circuit(2));
    const Complex col1[4] = {{0.5, 0}, {0, 0.5}, {-0.5, 0}, {0, -0.5}};
    for (int r = 0; r < 4; ++r) {
        CHECK(std::abs(m2(r, 1) - col1[r]) < 1e-14);
    }

    const auto u = apply_circuit(zero_state(5), qft_circuit(5));
    for (std::size_t i = 0; i < u.size(); ++i) {
        CHECK(std::abs(u[i] - std::pow(2.0, -2.5)) < 1e-14);
    }
    CHECK_THROWS(qft_circuit(0));
    CHECK_THROWS(qft_circuit(13));
}

TEST_CASE("QFT circuit equals the DFT matrix for n = 1..8") {
    for (std::size_t n = 1; n <= 8; ++n) {
        const auto diff = (circuit_matrix(qft_circuit(n)) - dft_matrix(n)).cwiseAbs().maxCoeff();
        CHECK_MESSAGE(diff < 1e-10, "n=" << n << " diff=" << diff);
    }
}

TEST_CASE("inner product examples") {
    Rng rng(5);
    const auto psi = qcheb::testing::random_state(4, rng);
    CHECK(std::abs(inner_product(psi, psi) - 1.0) < 1e-14);
    const auto one = apply_gate(zero_state(1), gates::x(0));
    CHECK(std::abs(inner_product(zero_state(1), one)) == 0.0);
    const auto plus = apply_gate(zero_state(1), gates::h(0));
    CHECK(std::abs(inner_product(plus, zero_state(1)) - kInvSqrt2) < 1e-15);
    // conjugation sits on the left argument
    const auto ipsi = apply_gate(plus, gates::p(0, std::numbers::pi / 2));
    CHECK(std::abs(inner_product(ipsi, zero_state(1)) - kInvSqrt2) < 1e-15);
    CHECK(std::abs(inner_product(zero_state(1), ipsi) - kInvSqrt2) < 1e-15);
    CHECK(std::abs(inner_product(ipsi, one) - Complex{0, -kInvSqrt2}) < 1e-15);
    CHECK_THROWS_AS(inner_product(zero_state(1), zero_state(2)), UsageError);
}

TEST_CASE("norm drift over 1000 random gates stays below 1e-10") {
    Rng rng(17);
    const std::size_t n = 10;
    auto psi = qcheb::testing::random_state(n, rng);
    for (int k = 0; k < 1000; ++k) {
        const auto q = static_cast<std::size_t>(rng.next_u64() % n);
        const double a = rng.uniform(-4, 4);
        switch (rng.next_u64() % 6) {
        case 0: psi.apply(gates::h(q)); break;
        case 1: psi.apply(gates::rx(q, a)); break;
        case 2: psi.apply(gates::ry(q, a)); break;
        case 3: psi.apply(gates::rz(q, a)); break;
        case 4: psi.apply(gates::p(q, a)); break;
        default: psi.apply(gates::cnot(q, (q + 1 + rng.next_u64() % (n - 1)) % n)); break;
        }
    }
    CHECK(std::abs(psi.norm_squared() - 1.0) < 1e-10);
}

TEST_CASE("circuit application is linear and matches the matrix product") {
    Rng rng(23);
    const std::size_t n = 5;
    Circuit c(n);
    for (int k = 0; k < 40; ++k) {
        const auto q = static_cast<std::size_t>(rng.next_u64() % n);
        c.ry(q, rng.uniform(-3, 3)).rz(q, rng.uniform(-3, 3)).cnot(q, (q + 1) % n);
    }
    c.add(gates::ry(2, 0.4).controlled_by({0, 4}));
    const auto a = qcheb::testing::random_state(n, rng);
    const auto b = qcheb::testing::random_state(n, rng);
    const Complex alpha{0.3, -0.7}, beta{-1.1, 0.2};

    std::vector<Complex> mix(a.size());
    for (std::size_t i = 0; i < mix.size(); ++i) {
        mix[i] = alpha * a[i] + beta * b[i];
    }
    const auto lhs = apply_circuit(Statevector::from_amplitudes(mix), c);
    const auto ca = apply_circuit(a, c);
    const auto cb = apply_circuit(b, c);
    const auto m = circuit_matrix(c);
    for (std::size_t i = 0; i < mix.size(); ++i) {
        CHECK(std::abs(lhs[i] - (alpha * ca[i] + beta * cb[i])) < 1e-10);
        Complex ref{0.0};
        for (std::size_t j = 0; j < mix.size(); ++j) {
            ref += m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) * a[j];
        }
        CHECK(std::abs(ca[i] - ref) < 1e-10);
    }
    const auto u = m.adjoint() * m;
    CHECK((u - Eigen::MatrixXcd::Identity(32, 32)).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("adjoint circuit undoes the circuit") {
    Rng rng(29);
    Circuit c(4);
    c.h(0).p(1, 0.3).rx(2, 1.2).cnot(0, 3).swap(1, 3).add(gates::ptilde(2, 1.0, 2.0, 0.4, 4));
    c.add(gates::rz(3, 0.9).controlled_by({0, 1}));
    auto full = c;
    full.append(c.adjoint());
    const auto psi = qcheb::testing::random_state(4, rng);
    CHECK(qcheb::testing::max_abs_diff(apply_circuit(psi, full), psi) < 1e-13);
}

TEST_CASE("sampling examples") {
    const auto det = sample_counts(zero_state(1), 1000, 1);
    CHECK(det[0] == 1000);
    CHECK(det[1] == 0);

    const auto plus = apply_gate(zero_state(1), gates::h(0));
    const auto c = sample_counts(plus, 1000000, 42);
    CHECK(c[0] + c[1] == 1000000);
    CHECK(std::abs(static_cast<double>(c[0]) - 5e5) < 5 * 500);

    CHECK(sample_counts(plus, 5000, 9) == sample_counts(plus, 5000, 9));
    CHECK_THROWS_AS(sample_counts(plus, 0, 1), UsageError);
    auto bad = Statevector::from_amplitudes({{1.0, 0.0}, {0.1, 0.0}});
    CHECK_THROWS_AS(sample_counts(bad, 10, 1), UsageError);
}

// Mean TV of an n-shot histogram is about sum_i sqrt(p_i (1 - p_i) / (2 pi n)).
double expected_tv(const std::vector<double> &p, double shots) {
    double acc = 0.0;
    for (double v : p) {
        acc += std::sqrt(v * (1.0 - v) / (2.0 * std::numbers::pi * shots));
    }
    return acc;
}

TEST_CASE("1e6 shots of a concentrated 8-qubit state stay within TV 0.005") {
    // product of RY rotations: mass spread over a few dozen outcomes
    auto psi = zero_state(8);
    for (std::size_t q = 0; q < 8; ++q) {
        psi.apply(gates::ry(q, 0.15 * static_cast<double>(q + 1)));
    }
    const auto p = psi.probabilities();
    const auto f = frequencies(sample_counts(psi, 1000000, 2024));
    CHECK(total_variation(f, p) < 0.005);
}

TEST_CASE("1e6-shot TV of a random 8-qubit state matches binomial statistics") {
    Rng rng(31);
    const auto psi = qcheb::testing::random_state(8, rng);
    const auto p = psi.probabilities();
    const double mean = expected_tv(p, 1e6);
    for (std::uint64_t seed : {2024u, 2025u, 2026u}) {
        const double tv = total_variation(frequencies(sample_counts(psi, 1000000, seed)), p);
        CHECK(tv > 0.8 * mean);
        CHECK(tv < 1.2 * mean);
    }
}

TEST_CASE("rng streams are reproducible and distinct") {
    Rng a(5, 1), b(5, 1), c(5, 2);
    for (int i = 0; i < 10; ++i) {
        const auto va = a.next_u64();
        CHECK(va == b.next_u64());
        CHECK(va != c.next_u64());
    }
    Rng u(8);
    for (int i = 0; i < 1000; ++i) {
        const double v = u.uniform();
        CHECK(v >= 0.0);
        CHECK(v < 1.0);
    }
}

} // TEST_SUITE
