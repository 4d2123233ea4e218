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
#include "qcheb/sim/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qcheb/errors.hpp"
#include "qcheb/sim/rng.hpp"

namespace qcheb::sim {

Histogram sample_counts(std::span<const double> probs, std::uint64_t shots, std::uint64_t seed) {
    if (shots == 0) {
        throw UsageError("shots must be >= 1");
    }
    std::vector<double> cdf(probs.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
        acc += probs[i];
        cdf[i] = acc;
    }
    if (std::abs(acc - 1.0) > 1e-8) {
        throw UsageError("cannot sample an unnormalized state (norm^2 = " + std::to_string(acc) +
                         ")");
    }
    // the last nonzero bucket absorbs rounding so every draw lands somewhere
    const auto last = static_cast<std::size_t>(
        std::distance(probs.begin(), std::find_if(probs.rbegin(), probs.rend(),
                                                  [](double p) { return p > 0.0; })
                                         .base()) -
        1);

    Histogram counts(probs.size(), 0);
    Rng rng(seed);
    for (std::uint64_t s = 0; s < shots; ++s) {
        const double u = rng.uniform() * acc;
        auto idx = static_cast<std::size_t>(std::upper_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
        counts[std::min(idx, last)] += 1;
    }
    return counts;
}

Histogram sample_counts(const Statevector &state, std::uint64_t shots, std::uint64_t seed) {
    const auto probs = state.probabilities();
    return sample_counts(std::span<const double>(probs), shots, seed);
}

std::vector<double> frequencies(const Histogram &counts) {
    std::uint64_t total = 0;
    for (auto c : counts) {
        total += c;
    }
    std::vector<double> f(counts.size(), 0.0);
    if (total == 0) {
        return f;
    }
    for (std::size_t i = 0; i < counts.size(); ++i) {
        f[i] = static_cast<double>(counts[i]) / static_cast<double>(total);
    }
    return f;
}

double total_variation(std::span<const double> p, std::span<const double> q) {
    if (p.size() != q.size()) {
        throw UsageError("total variation of distributions with different supports");
    }
    double acc = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        acc += std::abs(p[i] - q[i]);
    }
    return 0.5 * acc;
}

} // namespace qcheb::sim
