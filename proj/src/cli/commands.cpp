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
#include "qcheb/cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "qcheb/chebmath.hpp"
#include "qcheb/cli/config.hpp"
#include "qcheb/cli/csv.hpp"
#include "qcheb/dqgm/training.hpp"
#include "qcheb/encodings.hpp"
#include "qcheb/errors.hpp"
#include "qcheb/qcht.hpp"

namespace qcheb::cli {

namespace fs = std::filesystem;

namespace {

fs::path output_path(const std::string &flag, const char *default_name) {
    if (!flag.empty()) {
        return flag;
    }
    if (const char *dir = std::getenv(kOutputDirEnv); dir != nullptr && *dir != '\0') {
        return fs::path(dir) / default_name;
    }
    return default_name;
}

struct NodesOpts {
    std::size_t qubits = 0;
    std::string out;
};

struct OverlapOpts {
    std::size_t qubits = 3;
    std::size_t node = 7;
    std::size_t points = 512;
    std::string out;
};

struct FeatureMapOpts {
    std::size_t qubits = 0;
    double x = 0.0;
    std::string map = "chebyshev";
    std::string out;
};

struct VerifyOpts {
    std::size_t qubits = 0;
    std::size_t max_qubits = 8;
    bool corrupt = false;
};

struct TrainOpts {
    std::string config;
    std::string out;
    std::string loss_out;
    std::string map;
};

struct SampleOpts {
    std::string model;
    std::uint64_t shots = 0;
    std::optional<std::size_t> extend;
    std::optional<std::uint64_t> seed;
    std::string out;
};

struct DerivativeOpts {
    std::string model;
    std::size_t points = 200;
    bool with_prob = false;
    std::string out;
};

int cmd_nodes(const NodesOpts &o, std::ostream &out) {
    const auto grid = cheb::chebyshev_nodes(o.qubits);
    const auto hash = content_hash(json{{"command", "nodes"}, {"qubits", o.qubits}});
    const auto path = output_path(o.out, "nodes.csv");
    CsvWriter csv(path, hash, {"j", "x"});
    for (std::size_t j = 0; j < grid.size(); ++j) {
        csv.row({std::to_string(j), format_double(grid[j])});
    }
    csv.close();
    out << "wrote " << grid.size() << " nodes to " << path.string() << '\n';
    return kExitOk;
}

int cmd_overlap(const OverlapOpts &o, std::ostream &out) {
    const auto grid = cheb::chebyshev_nodes(o.qubits);
    if (o.node >= grid.size()) {
        throw UsageError("node index " + std::to_string(o.node) + " outside [0, " +
                         std::to_string(grid.size()) + ")");
    }
    if (o.points < 1) {
        throw UsageError("--points must be >= 1");
    }
    const double x_prime = grid[o.node];

    // uniform midpoint sweep of (-1, 1) merged with the grid itself
    std::vector<double> xs;
    xs.reserve(o.points + grid.size());
    for (std::size_t i = 0; i < o.points; ++i) {
        xs.push_back(-1.0 + 2.0 * (static_cast<double>(i) + 0.5) / static_cast<double>(o.points));
    }
    xs.insert(xs.end(), grid.nodes.begin(), grid.nodes.end());
    std::sort(xs.begin(), xs.end());

    const auto hash = content_hash(json{{"command", "overlap"},
                                        {"qubits", o.qubits},
                                        {"node", o.node},
                                        {"points", o.points}});
    const auto path = output_path(o.out, "overlap.csv");
    CsvWriter csv(path, hash, {"x", "overlap_sq"},
                  {"x_prime=" + format_double(x_prime) + " node=" + std::to_string(o.node)});
    for (double x : xs) {
        csv.row({format_double(x), format_double(cheb::overlap_sq_formula(o.qubits, x_prime, x))});
    }
    csv.close();
    out << "wrote " << xs.size() << " rows to " << path.string() << '\n';
    return kExitOk;
}

int cmd_featuremap(const FeatureMapOpts &o, std::ostream &out) {
    const auto kind = enc::parse_map_kind(o.map);
    enc::FeatureMapSpec request{kind, o.qubits, o.x};
    request.validate();

    std::vector<sim::Complex> prepared;
    std::vector<sim::Complex> analytic;
    double success = 1.0;
    if (kind == enc::MapKind::chebyshev) {
        auto ps = enc::prepare_tau_tilde(o.qubits, o.x);
        success = ps.success_probability;
        prepared.assign(ps.state.amplitudes().begin(), ps.state.amplitudes().end());
        for (double c : cheb::tau_state(o.qubits, o.x).normalized()) {
            analytic.emplace_back(c);
        }
    } else {
        auto s = enc::prepare_feature_state(request);
        prepared.assign(s.amplitudes().begin(), s.amplitudes().end());
        analytic = enc::phase_state(o.qubits, o.x);
    }
    sim::Complex ip{0.0};
    for (std::size_t k = 0; k < prepared.size(); ++k) {
        ip += std::conj(analytic[k]) * prepared[k];
    }
    const double fidelity = std::norm(ip);

    const auto hash = content_hash(
        json{{"command", "featuremap"}, {"qubits", o.qubits}, {"x", o.x}, {"map", o.map}});
    const auto path = output_path(o.out, "featuremap.csv");
    CsvWriter csv(path, hash, {"k", "amp_re", "amp_im", "analytic_re", "analytic_im"},
                  {"success_probability=" + format_double(success) +
                   " fidelity=" + format_double(fidelity)});
    for (std::size_t k = 0; k < prepared.size(); ++k) {
        csv.row({std::to_string(k), format_double(prepared[k].real()),
                 format_double(prepared[k].imag()), format_double(analytic[k].real()),
                 format_double(analytic[k].imag())});
    }
    csv.close();
    out << "fidelity " << std::setprecision(17) << fidelity << " success_probability " << success
        << '\n';
    return kExitOk;
}

int cmd_qcht_verify(const VerifyOpts &o, std::ostream &out) {
    if (o.qubits < 1 || o.qubits > o.max_qubits || o.max_qubits > 10) {
        throw UsageError("--qubits must lie in [1, " + std::to_string(std::min<std::size_t>(o.max_qubits, 10)) + "]");
    }
    auto circuit = qcht::build_qcht_circuit(o.qubits);
    if (o.corrupt) {
        // self-test: nudge the first R_Z so the check has something to catch
        for (auto &g : circuit.gates()) {
            if (g.kind == sim::GateKind::RZ) {
                g.angle += 1e-3;
                break;
            }
        }
    }
    const auto report = qcht::verify_qcht_circuit(circuit, o.qubits);
    out << std::setprecision(3) << std::scientific;
    out << "N=" << o.qubits << " gates=" << circuit.size() << '\n';
    out << "max |circuit - DCT-II| on ancilla-0 block: " << report.max_block_deviation << '\n';
    out << "max ancilla-1 amplitude: " << report.max_ancilla_amplitude << '\n';
    out << "max ancilla-1 weight:    " << report.max_ancilla_weight << '\n';

    bool ok = report.passed();
    if (o.qubits <= 5) {
        // feature map followed by the inverse transform returns |0>_a|j> at node j
        const auto inverse = circuit.adjoint();
        const std::size_t m = std::size_t{1} << o.qubits;
        double worst = 0.0;
        for (std::size_t j = 0; j < m; ++j) {
            const auto tilde = enc::prepare_tau_tilde(o.qubits, cheb::chebyshev_node(o.qubits, j));
            std::vector<sim::Complex> amps(2 * m, sim::Complex{0.0});
            std::copy(tilde.state.amplitudes().begin(), tilde.state.amplitudes().end(), amps.begin());
            auto s = sim::Statevector::from_amplitudes(std::move(amps));
            s.apply(inverse);
            for (std::size_t i = 0; i < 2 * m; ++i) {
                worst = std::max(worst, std::abs(s[i] - (i == j ? 1.0 : 0.0)));
            }
        }
        out << "max round-trip deviation: " << worst << '\n';
        ok = ok && worst < report.tolerance;
    }
    out << (ok ? "PASS" : "FAIL") << " (tolerance " << report.tolerance << ")\n";
    return ok ? kExitOk : kExitVerification;
}

int cmd_train(const TrainOpts &o, std::ostream &out) {
    auto doc = read_json(o.config);
    if (!o.map.empty()) {
        if (!doc.is_object()) {
            throw ConfigError("training config must be a JSON object");
        }
        doc["map"] = o.map;
    }
    const auto config = config_from_json(doc);
    const auto hash = content_hash(config_to_json(config));
    const auto result = dqgm::train(config);

    ModelFile model{result.params, config, hash, result.final_loss};
    const auto model_path = output_path(o.out, "model.json");
    write_json(model_path, model_to_json(model));

    const auto loss_path = output_path(o.loss_out, "loss.csv");
    CsvWriter csv(loss_path, hash, {"epoch", "loss"});
    for (std::size_t e = 0; e < result.loss_history.size(); ++e) {
        csv.row({std::to_string(e), format_double(result.loss_history[e])});
    }
    csv.close();
    out << "final_loss " << std::setprecision(6) << std::scientific << result.final_loss << '\n';
    out << "model " << model_path.string() << " loss " << loss_path.string() << '\n';
    return kExitOk;
}

int cmd_sample(const SampleOpts &o, std::ostream &out) {
    if (o.shots == 0) {
        throw UsageError("--shots must be >= 1");
    }
    const auto model = model_from_json(read_json(o.model));
    const std::uint64_t seed = o.seed.value_or(model.config.seed);
    const auto res = dqgm::sample_model(model.params, o.shots, o.extend, seed);
    const auto freq = sim::frequencies(res.counts);
    const double tv = sim::total_variation(freq, res.analytic);

    json flags{{"command", "sample"}, {"model", model.config_hash}, {"shots", o.shots}, {"seed", seed}};
    flags["extend"] = o.extend ? json(*o.extend) : json(nullptr);
    const auto path = output_path(o.out, "samples.csv");
    CsvWriter csv(path, content_hash(flags), {"j", "x_j", "count", "frequency", "analytic_prob"},
                  {"qubits=" + std::to_string(res.n_qubits) + " shots=" + std::to_string(o.shots) +
                   " tv=" + format_double(tv)});
    for (std::size_t j = 0; j < res.nodes.size(); ++j) {
        csv.row({std::to_string(j), format_double(res.nodes[j]), std::to_string(res.counts[j]),
                 format_double(freq[j]), format_double(res.analytic[j])});
    }
    csv.close();
    out << "tv_distance " << std::setprecision(6) << std::scientific << tv << '\n';
    return kExitOk;
}

int cmd_derivative(const DerivativeOpts &o, std::ostream &out) {
    if (o.points < 2) {
        throw UsageError("--points must be >= 2");
    }
    const auto model = model_from_json(read_json(o.model));
    const auto sweep = dqgm::derivative_sweep(model.params, model.config, o.points);

    json flags{{"command", "derivative"}, {"model", model.config_hash}, {"points", o.points}};
    std::vector<std::string> header{"x", "dpdx_model", "dpdx_target"};
    if (o.with_prob) {
        header.emplace_back("p_model");
    }
    const auto path = output_path(o.out, "derivative.csv");
    CsvWriter csv(path, content_hash(flags), header,
                  {"domain=[" + format_double(sweep.front().x) + "," + format_double(sweep.back().x) + "]"});
    for (const auto &pt : sweep) {
        std::vector<std::string> fields{format_double(pt.x), format_double(pt.model_dx),
                                        format_double(pt.target_dx)};
        if (o.with_prob) {
            fields.push_back(format_double(pt.model_p));
        }
        csv.row(fields);
    }
    csv.close();
    out << "mean_abs_derivative_error " << std::setprecision(6) << std::scientific
        << dqgm::mean_derivative_error(sweep) << '\n';
    return kExitOk;
}

} // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"qcheb: Chebyshev feature maps, the quantum Chebyshev transform and "
                 "generative models on a statevector simulator"};
    app.set_version_flag("--version", std::string("qcheb ") + QCHEB_VERSION);
    app.require_subcommand(1);

    NodesOpts nodes;
    auto *s_nodes = app.add_subcommand("nodes", "Write the Chebyshev node grid as CSV (j,x)");
    s_nodes->add_option("--qubits", nodes.qubits, "Register size N")->required();
    s_nodes->add_option("--out", nodes.out, "Output CSV path");

    OverlapOpts overlap;
    auto *s_overlap = app.add_subcommand("overlap", "Squared overlap |<tau(x_j)|tau(x)>|^2 sweep");
    s_overlap->add_option("--qubits", overlap.qubits, "Register size N")->capture_default_str();
    s_overlap->add_option("--node", overlap.node, "Node index j of x'")->capture_default_str();
    s_overlap->add_option("--points", overlap.points, "Uniform sweep points")->capture_default_str();
    s_overlap->add_option("--out", overlap.out, "Output CSV path");

    FeatureMapOpts fmap;
    auto *s_fmap = app.add_subcommand("featuremap", "Prepare a feature state and compare with the closed form");
    s_fmap->add_option("--qubits", fmap.qubits, "System qubits N")->required();
    s_fmap->add_option("--x", fmap.x, "Embedded variable")->required();
    s_fmap->add_option("--map", fmap.map, "chebyshev or phase")->capture_default_str();
    s_fmap->add_option("--out", fmap.out, "Output CSV path");

    VerifyOpts verify;
    auto *s_verify = app.add_subcommand("qcht-verify", "Check the transform circuit against the DCT-II");
    s_verify->add_option("--qubits", verify.qubits, "System qubits N")->required();
    s_verify->add_option("--max-qubits", verify.max_qubits, "Refuse N above this")->capture_default_str();
    s_verify->add_flag("--corrupt", verify.corrupt, "Perturb one gate (self-test of the checker)");

    TrainOpts trainopt;
    auto *s_train = app.add_subcommand("train", "Train a generative model from a JSON config");
    s_train->add_option("--config", trainopt.config, "Training config JSON")->required();
    s_train->add_option("--out", trainopt.out, "Model JSON path");
    s_train->add_option("--loss-out", trainopt.loss_out, "Per-epoch loss CSV path");
    s_train->add_option("--map", trainopt.map, "Override the feature map (chebyshev|phase)");

    SampleOpts sample;
    auto *s_sample = app.add_subcommand("sample", "Sample a trained model in the computational basis");
    s_sample->add_option("--model", sample.model, "Model JSON")->required();
    s_sample->add_option("--shots", sample.shots, "Number of shots")->required();
    s_sample->add_option("--extend", sample.extend, "Extend to this many qubits before sampling");
    s_sample->add_option("--seed", sample.seed, "Sampling seed (default: the model's seed)");
    s_sample->add_option("--out", sample.out, "Output CSV path");

    DerivativeOpts deriv;
    auto *s_deriv = app.add_subcommand("derivative", "dp/dx of a trained model against the target");
    s_deriv->add_option("--model", deriv.model, "Model JSON")->required();
    s_deriv->add_option("--points", deriv.points, "Sweep points")->capture_default_str();
    s_deriv->add_flag("--with-prob", deriv.with_prob, "Append a p_model column");
    s_deriv->add_option("--out", deriv.out, "Output CSV path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::CallForVersion &) {
        out << "qcheb " << QCHEB_VERSION << '\n';
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (s_nodes->parsed()) {
            return cmd_nodes(nodes, out);
        }
        if (s_overlap->parsed()) {
            return cmd_overlap(overlap, out);
        }
        if (s_fmap->parsed()) {
            return cmd_featuremap(fmap, out);
        }
        if (s_verify->parsed()) {
            return cmd_qcht_verify(verify, out);
        }
        if (s_train->parsed()) {
            return cmd_train(trainopt, out);
        }
        if (s_sample->parsed()) {
            return cmd_sample(sample, out);
        }
        if (s_deriv->parsed()) {
            return cmd_derivative(deriv, out);
        }
    } catch (const IoError &e) {
        err << "I/O error: " << e.what() << '\n';
        return kExitIo;
    } catch (const VerificationError &e) {
        err << "verification failed: " << e.what() << '\n';
        return kExitVerification;
    } catch (const NumericalError &e) {
        err << "numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const Error &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    std::vector<const char *> argv{"qcheb"};
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

} // namespace qcheb::cli
