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

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qcheb/chebmath.hpp"
#include "qcheb/dqgm/training.hpp"
#include "qcheb/errors.hpp"
#include "qcheb/qcht.hpp"
#include "qcheb/sim/rng.hpp"

using namespace qcheb;
using namespace qcheb::dqgm;
using sim::Complex;

namespace {

ModelParams random_params(std::size_t n, std::size_t depth, sim::Rng &rng,
                          enc::MapKind map = enc::MapKind::chebyshev) {
    ModelParams p;
    p.ansatz = {n, depth};
    p.map = map;
    p.theta.resize(p.ansatz.parameter_count());
    for (auto &t : p.theta) {
        t = rng.uniform(-std::numbers::pi, std::numbers::pi);
    }
    return p;
}

TrainingConfig linear_config(enc::MapKind map, std::size_t epochs) {
    TrainingConfig c;
    c.qubits = 2;
    c.depth = 6;
    c.epochs = epochs;
    c.learning_rate = 0.005;
    c.seed = 7;
    c.map = map;
    c.target.kind = TargetDistribution::Kind::linear;
    return c;
}

double rel_err(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-3); }

} // namespace

TEST_SUITE("dqgm") {

TEST_CASE("ansatz structure") {
    CHECK(AnsatzSpec{5, 14}.parameter_count() == 150);
    CHECK_THROWS_AS(AnsatzSpec({0, 1}).validate(), ConfigError);

    ModelParams zero;
    zero.ansatz = {4, 3};
    zero.theta.assign(zero.ansatz.parameter_count(), 0.0);
    const auto s = model_state(zero);
    CHECK(std::abs(s[0] - 1.0) < 1e-15);
    CHECK(std::abs(s.norm_squared() - 1.0) < 1e-15);

    ModelParams flip;
    flip.ansatz = {1, 1};
    flip.theta = {std::numbers::pi, 0.0, 0.0, 0.0};
    const auto f = model_state(flip);
    CHECK(std::abs(f[0]) < 1e-15);
    CHECK(std::abs(f[1] - 1.0) < 1e-15);

    ModelParams bad = zero;
    bad.theta.pop_back();
    CHECK_THROWS_AS(hea_circuit(bad), UsageError);
    bad = zero;
    bad.theta[0] = std::nan("");
    CHECK_THROWS_AS(model_state(bad), UsageError);
}

TEST_CASE("direct ansatz kernel matches the gate-level circuit") {
    sim::Rng rng(81);
    for (std::size_t n = 1; n <= 5; ++n) {
        const auto p = random_params(n, 3, rng);
        const auto a = model_state(p);
        const auto b = sim::apply_circuit(sim::zero_state(n), hea_circuit(p));
        for (std::size_t k = 0; k < a.size(); ++k) {
            CHECK(std::abs(a[k] - b[k]) < 1e-13);
        }
    }
}

TEST_CASE("model probability") {
    ModelParams zero;
    zero.ansatz = {3, 2};
    zero.theta.assign(zero.ansatz.parameter_count(), 0.0);
    for (double x : {-0.9, -0.1, 0.4, 1.0}) {
        CHECK(std::abs(model_prob(zero, x) - 0.125) < 1e-15);
        CHECK(std::abs(model_prob_dx(zero, x)) < 1e-15);
    }
    CHECK_THROWS_AS(model_prob(zero, 1.5), DomainError);

    sim::Rng rng(83);
    for (int i = 0; i < 100; ++i) {
        const std::size_t n = 1 + rng.next_u64() % 6;
        const auto p = random_params(n, 2, rng);
        double sum = 0.0;
        for (double x : cheb::chebyshev_nodes(n).nodes) {
            sum += model_prob(p, x);
        }
        CHECK(std::abs(sum - 1.0) < 1e-10);
    }
}

TEST_CASE("node probabilities equal post-transform basis probabilities") {
    sim::Rng rng(85);
    for (int i = 0; i < 20; ++i) {
        const std::size_t n = 1 + rng.next_u64() % 5;
        const auto p = random_params(n, 3, rng);
        const auto probs = transform_probabilities(p);
        for (std::size_t j = 0; j < probs.size(); ++j) {
            CHECK(std::abs(probs[j] - model_prob(p, cheb::chebyshev_node(n, j))) < 1e-10);
        }
    }
    // phase models read out through the inverse QFT on the grid j / 2^N
    const auto p = random_params(3, 3, rng, enc::MapKind::phase);
    const auto probs = transform_probabilities(p);
    for (std::size_t j = 0; j < 8; ++j) {
        CHECK(std::abs(probs[j] - model_prob(p, j / 8.0)) < 1e-12);
    }
}

TEST_CASE("x-derivative paths") {
    sim::Rng rng(87);
    auto central = [](const ModelParams &p, double x, double h) {
        return (model_prob(p, x + h) - model_prob(p, x - h)) / (2 * h);
    };
    for (int i = 0; i < 100; ++i) {
        const std::size_t n = 1 + rng.next_u64() % 5;
        const auto p = random_params(n, 2, rng);
        const double x = rng.uniform(-0.99, 0.99);
        const double d = model_prob_dx(p, x);
        CHECK(std::abs(d - central(p, x, 1e-6)) <= 1e-6 * std::abs(d));
        CHECK(std::abs(d - model_prob_dx_geff(p, x)) < 1e-12);
        // truncation error falls as h^2, so the residual is the oracle's, not ours
        const double e3 = std::abs(d - central(p, x, 1e-3));
        const double e4 = std::abs(d - central(p, x, 1e-4));
        if (e3 > 1e-10) {
            CHECK(e4 < 0.02 * e3);
        }
    }
    const double h = 1e-5;
    sim::Rng r2(88);
    const auto ph = random_params(3, 2, r2, enc::MapKind::phase);
    for (double x : {0.1, 0.37, 0.8}) {
        const double fd = (model_prob(ph, x + h) - model_prob(ph, x - h)) / (2 * h);
        CHECK(std::abs(model_prob_dx(ph, x) - fd) <= 1e-6 * std::max(1.0, std::abs(fd)));
    }
    CHECK_THROWS_AS(model_prob_dx_geff(ph, 0.2), UsageError);
}

TEST_CASE("target densities") {
    TargetDistribution ln;
    ln.kind = TargetDistribution::Kind::lognormal;
    ln.mu = 0.0;
    ln.sigma = 0.25;
    ln.s0 = 0.5;
    ln.t = 1.0;
    // ln(S/S0) = 0 leaves u = -sigma^2 t / 2
    const double u = -0.03125;
    const double expect = std::exp(-u * u / (2 * 0.0625)) / (0.5 * 0.25 * std::sqrt(2 * std::numbers::pi));
    CHECK(std::abs(target_density(ln, 0.5) - expect) < 1e-12);
    CHECK(std::abs(target_density(ln, 0.5) - 3.1666) < 1e-3);
    CHECK(target_density(ln, 0.0) == 0.0);
    CHECK(target_density(ln, -0.3) == 0.0);
    const double h = 1e-6;
    for (double x : {0.3, 0.5, 0.8}) {
        const double fd = (target_density(ln, x + h) - target_density(ln, x - h)) / (2 * h);
        CHECK(rel_err(target_density_dx(ln, x), fd) < 1e-6);
    }

    TargetDistribution lin;
    CHECK(target_density(lin, 0.25) == 0.25);
    CHECK(target_density(lin, -0.25) == 0.0);
    CHECK(target_density_dx(lin, 0.25) == 1.0);

    ln.sigma = 0.0;
    CHECK_THROWS_AS(ln.validate(), ConfigError);
}

TEST_CASE("training grid") {
    TrainingConfig c;
    c.qubits = 5;
    c.depth = 14;
    c.target.kind = TargetDistribution::Kind::lognormal;
    const auto set = build_training_set(c);
    CHECK(set.size() == 31);
    double sum = 0.0;
    for (std::size_t j = 0; j < 16; ++j) {
        CHECK(set[j].x == cheb::chebyshev_node(5, j));
        sum += set[j].target;
    }
    CHECK(std::abs(sum - 1.0) < 1e-12);
    for (std::size_t j = 16; j < 31; ++j) {
        CHECK(set[j].x < set[j - 16].x);
        CHECK(set[j].x > set[j - 15].x);
    }

    const auto lin = build_training_set(linear_config(enc::MapKind::chebyshev, 1));
    CHECK(lin.size() == 3);
    const auto ph = build_training_set(linear_config(enc::MapKind::phase, 1));
    CHECK(ph.size() == 7);
    double psum = 0.0;
    for (std::size_t j = 0; j < 4; ++j) {
        CHECK(ph[j].x == j / 4.0);
        psum += ph[j].target;
    }
    CHECK(std::abs(psum - 1.0) < 1e-12);

    auto nodes_only = linear_config(enc::MapKind::chebyshev, 1);
    nodes_only.grid = GridKind::nodes;
    CHECK(build_training_set(nodes_only).size() == 2);
}

TEST_CASE("loss") {
    sim::Rng rng(89);
    ModelParams zero;
    zero.ansatz = {3, 2};
    zero.theta.assign(zero.ansatz.parameter_count(), 0.0);
    TrainingSet uniform;
    for (double x : cheb::chebyshev_nodes(3).nodes) {
        uniform.push_back({x, 0.125});
    }
    CHECK(mse_loss(zero, uniform) < 1e-30);
    for (double g : grad_theta(zero, uniform)) {
        CHECK(std::abs(g) < 1e-15);
    }

    const auto p = random_params(3, 2, rng);
    TrainingSet perfect;
    for (double x : {-0.4, 0.2, 0.9}) {
        perfect.push_back({x, model_prob(p, x)});
    }
    CHECK(mse_loss(p, perfect) < 1e-30);

    auto shuffled = uniform;
    shuffled[0].target = 0.3;
    const double before = mse_loss(p, shuffled);
    std::reverse(shuffled.begin(), shuffled.end());
    CHECK(std::abs(mse_loss(p, shuffled) - before) < 1e-16);
    CHECK_THROWS_AS(mse_loss(p, TrainingSet{}), UsageError);
}

TEST_CASE("parameter-shift gradient matches finite differences") {
    sim::Rng rng(91);
    const double h = 1e-6;
    for (int cfg = 0; cfg < 20; ++cfg) {
        const std::size_t n = cfg == 0 ? 3 : 1 + rng.next_u64() % 4;
        const std::size_t depth = cfg == 0 ? 3 : 1 + rng.next_u64() % 3;
        auto p = random_params(n, depth, rng, cfg % 5 == 4 ? enc::MapKind::phase : enc::MapKind::chebyshev);
        TrainingConfig c = linear_config(p.map, 1);
        c.qubits = n;
        c.depth = depth;
        const auto set = build_training_set(c);
        const auto g = grad_theta(p, set);
        double scale = 0.0;
        for (double v : g) {
            scale = std::max(scale, std::abs(v));
        }
        for (std::size_t i = 0; i < p.theta.size(); ++i) {
            const double t0 = p.theta[i];
            p.theta[i] = t0 + h;
            const double up = mse_loss(p, set);
            p.theta[i] = t0 - h;
            const double dn = mse_loss(p, set);
            p.theta[i] = t0;
            const double fd = (up - dn) / (2 * h);
            CHECK(std::abs(g[i] - fd) <= 1e-6 * std::max(std::abs(fd), scale));
        }
    }
}

TEST_CASE("training is deterministic and converges on the linear target") {
    const auto c = linear_config(enc::MapKind::chebyshev, 5000);
    const auto a = train(c);
    const auto b = train(c);
    CHECK(a.loss_history == b.loss_history);
    CHECK(a.params.theta == b.params.theta);
    REQUIRE(a.loss_history.size() == 5000);
    for (double l : a.loss_history) {
        CHECK(std::isfinite(l));
    }
    const double best = *std::min_element(a.loss_history.begin(), a.loss_history.end());
    CHECK(std::min(best, a.final_loss) < 1e-6);
    CHECK(a.final_loss < a.loss_history.front());

    const auto set = build_training_set(c);
    double gmax = 0.0;
    for (double g : grad_theta(a.params, set)) {
        gmax = std::max(gmax, std::abs(g));
    }
    CHECK(gmax < 1e-4);

    auto other = c;
    other.seed = 8;
    other.epochs = 3;
    CHECK(train(other).loss_history != std::vector<double>(a.loss_history.begin(), a.loss_history.begin() + 3));

    auto gd = c;
    gd.optimizer.kind = OptimizerKind::gd;
    gd.epochs = 50;
    const auto r = train(gd);
    CHECK(r.final_loss <= r.loss_history.front());
}

TEST_CASE("initial angles lie in [-pi/10, pi/10]") {
    TrainingConfig c;
    c.qubits = 5;
    c.depth = 14;
    const auto p = initial_params(c);
    REQUIRE(p.theta.size() == 150);
    for (double t : p.theta) {
        CHECK(std::abs(t) <= std::numbers::pi / 10);
    }
    CHECK(initial_params(c).theta == p.theta);
}

TEST_CASE("sampling trained and random models") {
    sim::Rng rng(93);
    const auto p = random_params(4, 3, rng);
    const auto s = sample_model(p, 1000000, std::nullopt, 5);
    REQUIRE(s.counts.size() == 16);
    CHECK(sim::total_variation(sim::frequencies(s.counts), s.analytic) < 0.005);
    CHECK(sample_model(p, 1000, std::nullopt, 5).counts == sample_model(p, 1000, std::nullopt, 5).counts);
    CHECK_THROWS_AS(sample_model(p, 0, std::nullopt, 5), UsageError);

    const auto ext = sample_model(p, 1000000, 8, 5);
    CHECK(ext.n_qubits == 8);
    CHECK(ext.counts.size() == 256);
    CHECK(sim::total_variation(sim::frequencies(ext.counts), ext.analytic) < 0.01);

    const auto ph = random_params(2, 2, rng, enc::MapKind::phase);
    CHECK_THROWS_AS(sample_model(ph, 10, 4, 1), UsageError);
    CHECK_NOTHROW(sample_model(ph, 10, std::nullopt, 1));
}

TEST_CASE("extension keeps the function shape") {
    sim::Rng rng(95);
    const auto p = random_params(2, 6, rng);
    const auto psi = model_state(p);
    const auto ext = qcht::extend_register(psi, 8);
    const double ref = prob_from_state(enc::MapKind::chebyshev, ext, 0.3) /
                       prob_from_state(enc::MapKind::chebyshev, psi, 0.3);
    for (int i = 0; i < 50; ++i) {
        const double x = rng.uniform(-1, 1);
        const double a = prob_from_state(enc::MapKind::chebyshev, ext, x);
        const double b = prob_from_state(enc::MapKind::chebyshev, psi, x);
        CHECK(std::abs(a - ref * b) < 1e-9);
    }
}

} // TEST_SUITE
