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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qcheb/dqgm/model.hpp"
#include "qcheb/sim/sampling.hpp"

namespace qcheb::dqgm {

struct TargetDistribution {
    enum class Kind { lognormal, linear };

    Kind kind = Kind::linear;
    // lognormal (geometric Brownian motion at time t)
    double mu = 0.0;
    double sigma = 0.25;
    double s0 = 0.5;
    double t = 1.0;

    void validate() const;
};

const char *to_string(TargetDistribution::Kind kind);

/**
 * Unnormalized density at x. The lognormal is read with S_t = x:
 *   exp(-(ln(x/S0) + (mu - sigma^2/2) t)^2 / (2 sigma^2 t)) / (x sigma sqrt(2 pi t)),
 * the linear target is P(x) = x. Both vanish outside x > 0 (linear: x >= 0).
 */
double target_density(const TargetDistribution &target, double x);

double target_density_dx(const TargetDistribution &target, double x);

enum class OptimizerKind { adam, gd };

struct OptimizerSettings {
    OptimizerKind kind = OptimizerKind::adam;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double epsilon = 1e-8;
};

/// Training grid: the map's node set restricted as below, plus midpoints.
enum class GridKind { nodes_and_midpoints, nodes };

struct TrainingConfig {
    std::size_t qubits = 2;
    std::size_t depth = 6;
    std::size_t epochs = 5000;
    double learning_rate = 0.005;
    std::uint64_t seed = 1;
    enc::MapKind map = enc::MapKind::chebyshev;
    TargetDistribution target;
    GridKind grid = GridKind::nodes_and_midpoints;
    OptimizerSettings optimizer;

    void validate() const;
};

struct TrainingPoint {
    double x = 0.0;
    double target = 0.0;
};

using TrainingSet = std::vector<TrainingPoint>;

/// Node set of the map: Chebyshev nodes, or {j / 2^N} for the phase map.
std::vector<double> map_nodes(enc::MapKind map, std::size_t n_qubits);

/// Sum of the raw target over every node; dividing by it makes targets sum to 1 there.
double target_normalization(const TrainingConfig &config);

/**
 * Chebyshev map: positive nodes x_j (j < 2^{N-1}) and, between consecutive
 * ones, the half-index points x_{j+1/2} = cos(pi (2j+2) / 2^{N+1}).
 * Phase map: every grid point j/2^N and the midpoints (j+1/2)/2^N.
 * Targets are divided by target_normalization(config).
 */
TrainingSet build_training_set(const TrainingConfig &config);

double mse_loss(const ModelParams &params, const TrainingSet &set);

/// Exact gradient of mse_loss by the two-point parameter-shift rule.
std::vector<double> grad_theta(const ModelParams &params, const TrainingSet &set);

/// Initial angles: uniform on [-pi/10, pi/10] from the seeded generator.
ModelParams initial_params(const TrainingConfig &config);

struct TrainingResult {
    ModelParams params;
    std::vector<double> loss_history; ///< loss before the update of each epoch
    double final_loss = 0.0;          ///< loss at the returned parameters
};

/// Full-batch training; NumericalError on a non-finite loss.
TrainingResult train(const TrainingConfig &config);

/// One row of a derivative sweep. `target_dx` is already divided by the
/// grid normalization, so it is directly comparable with `model_dx`.
struct DerivativePoint {
    double x = 0.0;
    double model_dx = 0.0;
    double target_dx = 0.0;
    double model_p = 0.0;
};

/// `points` equispaced x over [min, max] of the training grid (points >= 2).
std::vector<DerivativePoint> derivative_sweep(const ModelParams &params,
                                              const TrainingConfig &config, std::size_t points);

/// Mean of |model_dx - target_dx| over a sweep.
double mean_derivative_error(const std::vector<DerivativePoint> &sweep);

/// Node-indexed sample of a trained model, computational-basis readout.
struct SampleResult {
    std::size_t n_qubits = 0;       ///< register actually sampled (after extension)
    std::vector<double> nodes;      ///< x_j of that register
    sim::Histogram counts;          ///< indexed by node j
    std::vector<double> analytic;   ///< |<f(x_j)|psi>|^2 from the closed form
};

/**
 * Exact basis probabilities of |0>_a psi after the inverse transform
 * (inverse QChT for Chebyshev models, inverse QFT for phase models), with
 * the ancilla marginalized. `extend_to` re-expresses psi on a larger register
 * first (Chebyshev models only).
 */
std::vector<double> transform_probabilities(const ModelParams &params,
                                            std::optional<std::size_t> extend_to = std::nullopt);

/// Samples the circuit above. UsageError for shots == 0.
SampleResult sample_model(const ModelParams &params, std::uint64_t shots,
                          std::optional<std::size_t> extend_to, std::uint64_t seed);

} // namespace qcheb::dqgm
