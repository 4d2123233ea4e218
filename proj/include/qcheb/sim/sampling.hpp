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

#include <cstdint>
#include <span>
#include <vector>

#include "qcheb/sim/statevector.hpp"

namespace qcheb::sim {

/// Measurement outcome counts indexed by basis state.
using Histogram = std::vector<std::uint64_t>;

/**
 * Draws `shots` computational-basis outcomes from |amplitude|^2 (Born rule).
 * Deterministic in `seed`. Throws UsageError for shots == 0 or when the state
 * norm deviates from 1 by more than 1e-8.
 */
Histogram sample_counts(const Statevector &state, std::uint64_t shots, std::uint64_t seed);

/// Same as above for an explicit probability vector (must sum to 1 within 1e-8).
Histogram sample_counts(std::span<const double> probs, std::uint64_t shots, std::uint64_t seed);

std::vector<double> frequencies(const Histogram &counts);

/// Half the L1 distance between two distributions of equal length.
double total_variation(std::span<const double> p, std::span<const double> q);

} // namespace qcheb::sim
