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
 * @file kernels.hpp
 * Amplitude-update kernels used by Statevector.
 *
 * Two implementations are kept side by side. `serial` is the reference: it
 * walks every basis index and tests bits directly, with no index tricks. The
 * `omp` kernels iterate only over the half (or quarter) of the index space
 * that carries a zero on the target bit(s) and parallelize that loop with
 * OpenMP once the register is large enough to amortize thread start-up and
 * the call is not already inside a parallel region.
 * Tests check the two against each other; bench/ times them.
 */

#include <cstddef>
#include <span>

#include "qcheb/sim/types.hpp"

namespace qcheb::sim::kernels {

/// Registers below this many amplitudes run the `omp` kernels single-threaded.
inline constexpr std::size_t kParallelThreshold = std::size_t{1} << 14;

namespace serial {

void apply_1q(std::span<Complex> amps, std::size_t n_qubits, std::size_t target,
              std::span<const std::size_t> controls, const Matrix2 &m);

void apply_swap(std::span<Complex> amps, std::size_t n_qubits, std::size_t a,
                std::size_t b, std::span<const std::size_t> controls);

double norm_squared(std::span<const Complex> amps);

Complex inner_product(std::span<const Complex> a, std::span<const Complex> b);

} // namespace serial

namespace omp {

void apply_1q(std::span<Complex> amps, std::size_t n_qubits, std::size_t target,
              std::span<const std::size_t> controls, const Matrix2 &m);

void apply_swap(std::span<Complex> amps, std::size_t n_qubits, std::size_t a,
                std::size_t b, std::span<const std::size_t> controls);

double norm_squared(std::span<const Complex> amps);

Complex inner_product(std::span<const Complex> a, std::span<const Complex> b);

} // namespace omp

} // namespace qcheb::sim::kernels
