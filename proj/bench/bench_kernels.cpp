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
// Wall-clock comparison of the serial reference kernels and the OpenMP
// kernels on one register size. Usage: bench_kernels [qubits] [repeats]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include <omp.h>

#include "qcheb/sim/gate.hpp"
#include "qcheb/sim/kernels.hpp"
#include "qcheb/sim/rng.hpp"

namespace {

using namespace qcheb::sim;
using Clock = std::chrono::steady_clock;

double time_ms(int repeats, const std::function<void()> &body) {
    body(); // warm-up
    const auto t0 = Clock::now();
    for (int r = 0; r < repeats; ++r) {
        body();
    }
    const auto t1 = Clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count() / repeats;
}

void report(const char *name, double serial_ms, double omp_ms) {
    std::printf("%-22s serial %9.3f ms   omp %9.3f ms   speedup %5.2fx\n", name, serial_ms, omp_ms,
                serial_ms / omp_ms);
}

} // namespace

int main(int argc, char **argv) {
    const std::size_t n = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 20;
    const int repeats = argc > 2 ? std::atoi(argv[2]) : 5;
    if (n < 2 || n > kMaxQubits) {
        std::fprintf(stderr, "qubits must lie in [2, %zu]\n", kMaxQubits);
        return 1;
    }
    const std::size_t dim = std::size_t{1} << n;

    Rng rng(1234, 0);
    std::vector<Complex> a(dim), b(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        a[i] = {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
        b[i] = {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
    }
    auto work = a;

    std::printf("qubits %zu  amplitudes %zu  threads %d  repeats %d\n", n, dim,
                omp_get_max_threads(), repeats);

    const auto ry = gates::ry_matrix(0.37);
    const std::vector<std::size_t> none;
    const std::vector<std::size_t> ctrl{0, n / 2};

    for (std::size_t target : {std::size_t{0}, n / 2, n - 1}) {
        const std::string label = "RY q" + std::to_string(target);
        report(label.c_str(),
               time_ms(repeats, [&] { kernels::serial::apply_1q(work, n, target, none, ry); }),
               time_ms(repeats, [&] { kernels::omp::apply_1q(work, n, target, none, ry); }));
    }
    report("CC-RY q(n-1)",
           time_ms(repeats, [&] { kernels::serial::apply_1q(work, n, n - 1, ctrl, ry); }),
           time_ms(repeats, [&] { kernels::omp::apply_1q(work, n, n - 1, ctrl, ry); }));
    report("SWAP q0,q(n-1)",
           time_ms(repeats, [&] { kernels::serial::apply_swap(work, n, 0, n - 1, none); }),
           time_ms(repeats, [&] { kernels::omp::apply_swap(work, n, 0, n - 1, none); }));

    volatile double sink = 0.0;
    report("norm_squared", time_ms(repeats, [&] { sink = kernels::serial::norm_squared(a); }),
           time_ms(repeats, [&] { sink = kernels::omp::norm_squared(a); }));
    report("inner_product",
           time_ms(repeats, [&] { sink = kernels::serial::inner_product(a, b).real(); }),
           time_ms(repeats, [&] { sink = kernels::omp::inner_product(a, b).real(); }));
    (void)sink;
    return 0;
}
