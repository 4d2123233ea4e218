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

#include <cmath>
#include <vector>

#include "qcheb/sim/rng.hpp"
#include "qcheb/sim/statevector.hpp"

namespace qcheb::testing {

inline sim::Statevector random_state(std::size_t n, sim::Rng &rng) {
    std::vector<sim::Complex> amps(std::size_t{1} << n);
    for (auto &a : amps) {
        a = {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
    }
    auto s = sim::Statevector::from_amplitudes(std::move(amps));
    s.normalize();
    return s;
}

inline double max_abs_diff(const sim::Statevector &a, const sim::Statevector &b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        worst = std::max(worst, std::abs(a[i] - b[i]));
    }
    return worst;
}

} // namespace qcheb::testing
