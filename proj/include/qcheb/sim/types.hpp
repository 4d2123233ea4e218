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

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>

namespace qcheb::sim {

using Complex = std::complex<double>;

/// Row-major 2x2 complex matrix: {m00, m01, m10, m11}.
using Matrix2 = std::array<Complex, 4>;

/// Largest register the dense simulator accepts.
inline constexpr std::size_t kMaxQubits = 24;

/**
 * Bit position of qubit `q` inside a basis-state index of an `n`-qubit
 * register. Qubit 0 is the most significant bit everywhere in this library,
 * so the top wire of a circuit diagram (the ancilla, when present) selects
 * the upper half of the amplitude vector.
 */
constexpr std::size_t bit_position(std::size_t n, std::size_t q) noexcept {
    return n - 1 - q;
}

constexpr std::uint64_t qubit_mask(std::size_t n, std::size_t q) noexcept {
    return std::uint64_t{1} << bit_position(n, q);
}

} // namespace qcheb::sim
