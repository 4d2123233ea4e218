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
#include "qcheb/dqgm/training.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qcheb/chebmath.hpp"
#include "qcheb/errors.hpp"
#include "qcheb/qcht.hpp"
#include "qcheb/sim/rng.hpp"

namespace qcheb::dqgm {

using sim::Complex;

namespace {

constexpr double kShift = std::numbers::pi / 2.0;

// Feature vectors of a training set, computed once per set.
struct FeatureTable {
    std::vector<std::vector<Complex>> features;
    std::vector<double> targets;

    FeatureTable(enc::MapKind map, std::size_t n, const TrainingSet &set) {
        features.reserve(set.size());
        targets.reserve(set.size());
        for (const auto &pt : set) {
            features.push_back(feature_vector(map, n, pt.x));
            targets.push_back(pt.target);
        }
    }

    double prob(std::size_t i, const sim::Statevector &psi) const {
        Complex acc{0.0};
        const auto &f = features[i];
        for (std::size_t k = 0; k < f.size(); ++k) {
            acc += std::conj(f[k]) * psi[k];
        }
        return std::norm(acc);
    }

    double loss(const sim::Statevector &psi) const {
        double acc = 0.0;
        for (std::size_t i = 0; i < features.size(); ++i) {
            const double r = prob(i, psi) - targets[i];
            acc += r * r;
        }
        return acc / static_cast<double>(features.size());
    }
};

std::vector<double> gradient(const ModelParams &params, const FeatureTable &table) {
    const auto psi = model_state(params.ansatz, params.theta);
    const std::size_t points = table.features.size();
    std::vector<double> residual(points);
    for (std::size_t i = 0; i < points; ++i) {
        residual[i] = table.prob(i, psi) - table.targets[i];
    }

    const auto count = static_cast<std::int64_t>(params.theta.size());
    std::vector<double> grad(params.theta.size(), 0.0);
    // one shifted pair per angle; each iteration owns grad[p], so the result
    // does not depend on the thread count
#pragma omp parallel for schedule(static)
    for (std::int64_t p = 0; p < count; ++p) {
        std::vector<double> theta(params.theta);
        const auto up = static_cast<std::size_t>(p);
        theta[up] = params.theta[up] + kShift;
        const auto plus = model_state(params.ansatz, theta);
        theta[up] = params.theta[up] - kShift;
        const auto minus = model_state(params.ansatz, theta);
        double acc = 0.0;
        for (std::size_t i = 0; i < points; ++i) {
            const double dp = 0.5 * (table.prob(i, plus) - table.prob(i, minus));
            acc += residual[i] * dp;
        }
        grad[up] = 2.0 * acc / static_cast<double>(points);
    }
    return grad;
}

} // namespace

void TargetDistribution::validate() const {
    if (kind == Kind::lognormal) {
        if (!(sigma > 0.0) || !(s0 > 0.0) || !(t > 0.0) || !std::isfinite(mu)) {
            throw ConfigError("lognormal target needs sigma > 0, s0 > 0, t > 0 and finite mu");
        }
    }
}

const char *to_string(TargetDistribution::Kind kind) {
    return kind == TargetDistribution::Kind::lognormal ? "lognormal" : "linear";
}

double target_density(const TargetDistribution &target, double x) {
    if (target.kind == TargetDistribution::Kind::linear) {
        return x >= 0.0 ? x : 0.0;
    }
    if (!(x > 0.0)) {
        return 0.0;
    }
    const double var = target.sigma * target.sigma * target.t;
    const double u = std::log(x / target.s0) + (target.mu - 0.5 * target.sigma * target.sigma) * target.t;
    return std::exp(-u * u / (2.0 * var)) /
           (x * target.sigma * std::sqrt(2.0 * std::numbers::pi * target.t));
}

double target_density_dx(const TargetDistribution &target, double x) {
    if (target.kind == TargetDistribution::Kind::linear) {
        return x > 0.0 ? 1.0 : 0.0;
    }
    if (!(x > 0.0)) {
        return 0.0;
    }
    const double var = target.sigma * target.sigma * target.t;
    const double u = std::log(x / target.s0) + (target.mu - 0.5 * target.sigma * target.sigma) * target.t;
    return target_density(target, x) * (-1.0 / x - u / (var * x));
}

void TrainingConfig::validate() const {
    AnsatzSpec{qubits, depth}.validate();
    if (epochs < 1) {
        throw ConfigError("epochs must be >= 1");
    }
    if (!(learning_rate > 0.0) || !std::isfinite(learning_rate)) {
        throw ConfigError("learning_rate must be positive");
    }
    if (optimizer.kind == OptimizerKind::adam &&
        !(optimizer.beta1 >= 0.0 && optimizer.beta1 < 1.0 && optimizer.beta2 >= 0.0 &&
          optimizer.beta2 < 1.0 && optimizer.epsilon > 0.0)) {
        throw ConfigError("Adam needs 0 <= beta1, beta2 < 1 and epsilon > 0");
    }
    target.validate();
}

std::vector<double> map_nodes(enc::MapKind map, std::size_t n_qubits) {
    const std::size_t m = std::size_t{1} << n_qubits;
    std::vector<double> nodes(m);
    for (std::size_t j = 0; j < m; ++j) {
        nodes[j] = map == enc::MapKind::chebyshev
                       ? cheb::chebyshev_node(n_qubits, j)
                       : static_cast<double>(j) / static_cast<double>(m);
    }
    return nodes;
}

double target_normalization(const TrainingConfig &config) {
    double z = 0.0;
    for (double x : map_nodes(config.map, config.qubits)) {
        z += target_density(config.target, x);
    }
    if (!(z > 0.0) || !std::isfinite(z)) {
        throw ConfigError("target has no mass on the node grid");
    }
    return z;
}

TrainingSet build_training_set(const TrainingConfig &config) {
    config.validate();
    const std::size_t n = config.qubits;
    const std::size_t m = std::size_t{1} << n;
    const bool mids = config.grid == GridKind::nodes_and_midpoints;
    const double z = target_normalization(config);

    std::vector<double> xs;
    if (config.map == enc::MapKind::chebyshev) {
        const std::size_t positive = m / 2;
        for (std::size_t j = 0; j < positive; ++j) {
            xs.push_back(cheb::chebyshev_node(n, j));
        }
        if (mids) {
            const double denom = std::ldexp(1.0, static_cast<int>(n) + 1);
            for (std::size_t j = 0; j + 1 < positive; ++j) {
                xs.push_back(std::cos(std::numbers::pi * static_cast<double>(2 * j + 2) / denom));
            }
        }
    } else {
        for (std::size_t j = 0; j < m; ++j) {
            xs.push_back(static_cast<double>(j) / static_cast<double>(m));
        }
        if (mids) {
            for (std::size_t j = 0; j + 1 < m; ++j) {
                xs.push_back((static_cast<double>(j) + 0.5) / static_cast<double>(m));
            }
        }
    }

    TrainingSet set;
    set.reserve(xs.size());
    for (double x : xs) {
        set.push_back({x, target_density(config.target, x) / z});
    }
    return set;
}

double mse_loss(const ModelParams &params, const TrainingSet &set) {
    params.validate();
    if (set.empty()) {
        throw UsageError("empty training set");
    }
    const FeatureTable table(params.map, params.ansatz.n_qubits, set);
    return table.loss(model_state(params.ansatz, params.theta));
}

std::vector<double> grad_theta(const ModelParams &params, const TrainingSet &set) {
    params.validate();
    if (set.empty()) {
        throw UsageError("empty training set");
    }
    const FeatureTable table(params.map, params.ansatz.n_qubits, set);
    return gradient(params, table);
}

ModelParams initial_params(const TrainingConfig &config) {
    ModelParams params;
    params.ansatz = AnsatzSpec{config.qubits, config.depth};
    params.map = config.map;
    // stream 1 is reserved for initialization; sampling uses stream 0
    sim::Rng rng(config.seed, 1);
    const double bound = std::numbers::pi / 10.0;
    params.theta.resize(params.ansatz.parameter_count());
    for (auto &t : params.theta) {
        t = rng.uniform(-bound, bound);
    }
    return params;
}

TrainingResult train(const TrainingConfig &config) {
    config.validate();
    const auto set = build_training_set(config);
    const FeatureTable table(config.map, config.qubits, set);

    TrainingResult result;
    result.params = initial_params(config);
    auto &theta = result.params.theta;
    result.loss_history.reserve(config.epochs);

    std::vector<double> m1(theta.size(), 0.0);
    std::vector<double> m2(theta.size(), 0.0);
    const auto &opt = config.optimizer;
    double b1t = 1.0;
    double b2t = 1.0;

    for (std::size_t epoch = 0; epoch < config.epochs; ++epoch) {
        const double loss = table.loss(model_state(result.params.ansatz, theta));
        if (!std::isfinite(loss)) {
            throw NumericalError("non-finite loss at epoch " + std::to_string(epoch));
        }
        result.loss_history.push_back(loss);

        const auto grad = gradient(result.params, table);
        if (opt.kind == OptimizerKind::gd) {
            for (std::size_t i = 0; i < theta.size(); ++i) {
                theta[i] -= config.learning_rate * grad[i];
            }
            continue;
        }
        b1t *= opt.beta1;
        b2t *= opt.beta2;
        for (std::size_t i = 0; i < theta.size(); ++i) {
            m1[i] = opt.beta1 * m1[i] + (1.0 - opt.beta1) * grad[i];
            m2[i] = opt.beta2 * m2[i] + (1.0 - opt.beta2) * grad[i] * grad[i];
            const double mhat = m1[i] / (1.0 - b1t);
            const double vhat = m2[i] / (1.0 - b2t);
            theta[i] -= config.learning_rate * mhat / (std::sqrt(vhat) + opt.epsilon);
        }
    }
    result.final_loss = table.loss(model_state(result.params.ansatz, theta));
    if (!std::isfinite(result.final_loss)) {
        throw NumericalError("non-finite loss after training");
    }
    return result;
}

std::vector<DerivativePoint> derivative_sweep(const ModelParams &params,
                                              const TrainingConfig &config, std::size_t points) {
    if (points < 2) {
        throw UsageError("a derivative sweep needs at least 2 points");
    }
    const auto set = build_training_set(config);
    const double z = target_normalization(config);
    const auto [lo_it, hi_it] = std::minmax_element(
        set.begin(), set.end(), [](const TrainingPoint &a, const TrainingPoint &b) { return a.x < b.x; });
    const double lo = lo_it->x;
    const double hi = hi_it->x;

    const auto psi = model_state(params);
    std::vector<DerivativePoint> out(points);
    for (std::size_t i = 0; i < points; ++i) {
        auto &pt = out[i];
        pt.x = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(points - 1);
        pt.model_dx = prob_dx_from_state(params.map, psi, pt.x);
        pt.target_dx = target_density_dx(config.target, pt.x) / z;
        pt.model_p = prob_from_state(params.map, psi, pt.x);
    }
    return out;
}

double mean_derivative_error(const std::vector<DerivativePoint> &sweep) {
    if (sweep.empty()) {
        throw UsageError("empty derivative sweep");
    }
    double acc = 0.0;
    for (const auto &pt : sweep) {
        acc += std::abs(pt.model_dx - pt.target_dx);
    }
    return acc / static_cast<double>(sweep.size());
}

namespace {

// psi (possibly extended), and the full readout state after the inverse transform
struct Readout {
    sim::Statevector psi;
    sim::Statevector full;
};

Readout readout_state(const ModelParams &params, std::optional<std::size_t> extend_to) {
    auto psi = model_state(params);
    if (params.map == enc::MapKind::phase) {
        if (extend_to) {
            throw UsageError("register extension is defined for Chebyshev models only");
        }
        auto full = psi;
        full.apply(sim::qft_circuit(psi.n_qubits()).adjoint());
        return {std::move(psi), std::move(full)};
    }
    if (extend_to) {
        psi = qcht::extend_register(psi, *extend_to);
    }
    std::vector<Complex> amps(2 * psi.size(), Complex{0.0});
    std::copy(psi.amplitudes().begin(), psi.amplitudes().end(), amps.begin());
    auto full = qcht::apply_qcht(sim::Statevector::from_amplitudes(std::move(amps)), true);
    return {std::move(psi), std::move(full)};
}

template <typename T> std::vector<T> fold(const std::vector<T> &v, std::size_t m) {
    std::vector<T> out(m, T{});
    for (std::size_t i = 0; i < v.size(); ++i) {
        out[i % m] += v[i];
    }
    return out;
}

} // namespace

std::vector<double> transform_probabilities(const ModelParams &params,
                                            std::optional<std::size_t> extend_to) {
    const auto r = readout_state(params, extend_to);
    return fold(r.full.probabilities(), r.psi.size());
}

SampleResult sample_model(const ModelParams &params, std::uint64_t shots,
                          std::optional<std::size_t> extend_to, std::uint64_t seed) {
    if (shots == 0) {
        throw UsageError("shots must be >= 1");
    }
    const auto r = readout_state(params, extend_to);
    SampleResult out;
    out.n_qubits = r.psi.n_qubits();
    out.nodes = map_nodes(params.map, out.n_qubits);
    out.counts = fold(sim::sample_counts(r.full, shots, seed), r.psi.size());
    out.analytic.reserve(out.nodes.size());
    for (double x : out.nodes) {
        out.analytic.push_back(prob_from_state(params.map, r.psi, x));
    }
    return out;
}

} // namespace qcheb::dqgm
