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
#include "qcheb/sim/kernels.hpp"

#include <cstdint>
#include <utility>

#include <omp.h>

namespace qcheb::sim::kernels {

namespace {

std::uint64_t control_mask(std::size_t n, std::span<const std::size_t> controls) {
    std::uint64_t mask = 0;
    for (auto c : controls) {
        mask |= qubit_mask(n, c);
    }
    return mask;
}

// Inserts a zero bit at position `pos`, shifting the higher bits up by one.
inline std::uint64_t insert_zero(std::uint64_t i, std::size_t pos) noexcept {
    const std::uint64_t low = i & ((std::uint64_t{1} << pos) - 1);
    return ((i >> pos) << (pos + 1)) | low;
}

// a*x + b*y in real arithmetic; std::complex operator* carries a NaN-recovery
// branch that dominates small-register runtimes
inline Complex mac(const Complex &a, const Complex &x, const Complex &b, const Complex &y) noexcept {
    return {a.real() * x.real() - a.imag() * x.imag() + b.real() * y.real() - b.imag() * y.imag(),
            a.real() * x.imag() + a.imag() * x.real() + b.real() * y.imag() + b.imag() * y.real()};
}

// Runs body(k) for k in [0, count). Small ranges and calls made from inside
// another parallel region stay on the calling thread: a nested region still
// pays for a thread team even when its if-clause is false.
template <typename Body> void for_range(std::int64_t count, bool large, Body &&body) {
    if (!large || omp_in_parallel() != 0) {
        for (std::int64_t k = 0; k < count; ++k) {
            body(k);
        }
        return;
    }
#pragma omp parallel for schedule(static)
    for (std::int64_t k = 0; k < count; ++k) {
        body(k);
    }
}

bool is_large(std::size_t size) noexcept { return size >= kParallelThreshold; }

} // namespace

namespace serial {

void apply_1q(std::span<Complex> amps, std::size_t n_qubits, std::size_t target,
              std::span<const std::size_t> controls, const Matrix2 &m) {
    const std::uint64_t tbit = qubit_mask(n_qubits, target);
    const std::uint64_t cmask = control_mask(n_qubits, controls);
    for (std::uint64_t i = 0; i < amps.size(); ++i) {
        if ((i & tbit) != 0 || (i & cmask) != cmask) {
            continue;
        }
        const std::uint64_t j = i | tbit;
        const Complex a0 = amps[i];
        const Complex a1 = amps[j];
        amps[i] = m[0] * a0 + m[1] * a1;
        amps[j] = m[2] * a0 + m[3] * a1;
    }
}

void apply_swap(std::span<Complex> amps, std::size_t n_qubits, std::size_t a,
                std::size_t b, std::span<const std::size_t> controls) {
    const std::uint64_t abit = qubit_mask(n_qubits, a);
    const std::uint64_t bbit = qubit_mask(n_qubits, b);
    const std::uint64_t cmask = control_mask(n_qubits, controls);
    for (std::uint64_t i = 0; i < amps.size(); ++i) {
        // visit each |..1..0..> / |..0..1..> pair once, from the a=1,b=0 side
        if ((i & abit) == 0 || (i & bbit) != 0 || (i & cmask) != cmask) {
            continue;
        }
        std::swap(amps[i], amps[(i & ~abit) | bbit]);
    }
}

double norm_squared(std::span<const Complex> amps) {
    double acc = 0.0;
    for (const auto &a : amps) {
        acc += std::norm(a);
    }
    return acc;
}

Complex inner_product(std::span<const Complex> a, std::span<const Complex> b) {
    Complex acc{0.0, 0.0};
    for (std::size_t i = 0; i < a.size(); ++i) {
        acc += std::conj(a[i]) * b[i];
    }
    return acc;
}

} // namespace serial

namespace omp {

void apply_1q(std::span<Complex> amps, std::size_t n_qubits, std::size_t target,
              std::span<const std::size_t> controls, const Matrix2 &m) {
    const std::size_t pos = bit_position(n_qubits, target);
    const std::uint64_t tbit = std::uint64_t{1} << pos;
    const std::uint64_t cmask = control_mask(n_qubits, controls);
    const auto half = static_cast<std::int64_t>(amps.size() / 2);
    Complex *data = amps.data();
    const Complex m00 = m[0], m01 = m[1], m10 = m[2], m11 = m[3];

    for_range(half, is_large(amps.size()), [=](std::int64_t k) {
        const std::uint64_t i = insert_zero(static_cast<std::uint64_t>(k), pos);
        if ((i & cmask) != cmask) {
            return;
        }
        const std::uint64_t j = i | tbit;
        const Complex a0 = data[i];
        const Complex a1 = data[j];
        data[i] = mac(m00, a0, m01, a1);
        data[j] = mac(m10, a0, m11, a1);
    });
}

void apply_swap(std::span<Complex> amps, std::size_t n_qubits, std::size_t a,
                std::size_t b, std::span<const std::size_t> controls) {
    std::size_t lo = bit_position(n_qubits, a);
    std::size_t hi = bit_position(n_qubits, b);
    if (lo > hi) {
        std::swap(lo, hi);
    }
    const std::uint64_t lobit = std::uint64_t{1} << lo;
    const std::uint64_t hibit = std::uint64_t{1} << hi;
    const std::uint64_t cmask = control_mask(n_qubits, controls);
    const auto quarter = static_cast<std::int64_t>(amps.size() / 4);
    Complex *data = amps.data();

    for_range(quarter, is_large(amps.size()), [=](std::int64_t k) {
        const std::uint64_t base = insert_zero(insert_zero(static_cast<std::uint64_t>(k), lo), hi);
        if ((base & cmask) != cmask) {
            return;
        }
        std::swap(data[base | lobit], data[base | hibit]);
    });
}

double norm_squared(std::span<const Complex> amps) {
    if (!is_large(amps.size()) || omp_in_parallel() != 0) {
        return serial::norm_squared(amps);
    }
    double acc = 0.0;
    const auto size = static_cast<std::int64_t>(amps.size());
    const Complex *data = amps.data();
#pragma omp parallel for schedule(static) reduction(+ : acc)
    for (std::int64_t i = 0; i < size; ++i) {
        acc += std::norm(data[i]);
    }
    return acc;
}

Complex inner_product(std::span<const Complex> a, std::span<const Complex> b) {
    if (!is_large(a.size()) || omp_in_parallel() != 0) {
        return serial::inner_product(a, b);
    }
    double re = 0.0;
    double im = 0.0;
    const auto size = static_cast<std::int64_t>(a.size());
    const Complex *pa = a.data();
    const Complex *pb = b.data();
#pragma omp parallel for schedule(static) reduction(+ : re, im)
    for (std::int64_t i = 0; i < size; ++i) {
        const Complex t = std::conj(pa[i]) * pb[i];
        re += t.real();
        im += t.imag();
    }
    return {re, im};
}

} // namespace omp

} // namespace qcheb::sim::kernels
