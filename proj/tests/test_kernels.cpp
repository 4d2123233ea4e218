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

#include <vector>

#include "helpers.hpp"
#include "qcheb/sim/gate.hpp"
#include "qcheb/sim/kernels.hpp"

using namespace qcheb::sim;

namespace {

std::vector<Complex> random_amps(std::size_t n, Rng &rng) {
    std::vector<Complex> v(std::size_t{1} << n);
    for (auto &a : v) {
        a = {rng.uniform(-1, 1), rng.uniform(-1, 1)};
    }
    return v;
}

double max_diff(const std::vector<Complex> &a, const std::vector<Complex> &b) {
    double w = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        w = std::max(w, std::abs(a[i] - b[i]));
    }
    return w;
}

} // namespace

TEST_SUITE("kernels") {

// 16 qubits sits above kParallelThreshold so the OpenMP path is exercised.
TEST_CASE("omp and serial kernels agree on every target and control pattern") {
    Rng rng(101);
    for (std::size_t n : {1u, 3u, 6u, 16u}) {
        auto ref = random_amps(n, rng);
        auto par = ref;
        for (std::size_t t = 0; t < n; ++t) {
            const auto m = gates::ry_matrix(rng.uniform(-3, 3));
            kernels::serial::apply_1q(ref, n, t, {}, m);
            kernels::omp::apply_1q(par, n, t, {}, m);
            if (n >= 3) {
                const std::vector<std::size_t> ctrl{(t + 1) % n, (t + 2) % n};
                const auto u = gates::rx_matrix(rng.uniform(-3, 3));
                kernels::serial::apply_1q(ref, n, t, ctrl, u);
                kernels::omp::apply_1q(par, n, t, ctrl, u);
                kernels::serial::apply_swap(ref, n, t, (t + 1) % n, std::span(ctrl).first(0));
                kernels::omp::apply_swap(par, n, t, (t + 1) % n, std::span(ctrl).first(0));
                kernels::serial::apply_swap(ref, n, (t + 1) % n, t, std::span(ctrl).last(1));
                kernels::omp::apply_swap(par, n, (t + 1) % n, t, std::span(ctrl).last(1));
            }
        }
        CHECK_MESSAGE(max_diff(ref, par) < 1e-13, "n=" << n);
    }
}

TEST_CASE("omp and serial reductions agree") {
    Rng rng(103);
    for (std::size_t n : {2u, 16u}) {
        const auto a = random_amps(n, rng);
        const auto b = random_amps(n, rng);
        const double tol = 1e-12 * static_cast<double>(a.size());
        CHECK(std::abs(kernels::serial::norm_squared(a) - kernels::omp::norm_squared(a)) < tol);
        CHECK(std::abs(kernels::serial::inner_product(a, b) - kernels::omp::inner_product(a, b)) < tol);
    }
}

} // TEST_SUITE
