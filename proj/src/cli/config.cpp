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
#include "qcheb/cli/config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "qcheb/errors.hpp"

namespace qcheb::cli {

namespace {

void reject_unknown(const json &obj, const std::set<std::string> &allowed, const std::string &where) {
    if (!obj.is_object()) {
        throw ConfigError(where + " must be a JSON object");
    }
    for (const auto &[key, _] : obj.items()) {
        if (!allowed.contains(key)) {
            throw ConfigError("unknown key '" + key + "' in " + where);
        }
    }
}

const json &require(const json &obj, const std::string &key, const std::string &where) {
    if (!obj.contains(key)) {
        throw ConfigError("missing key '" + key + "' in " + where);
    }
    return obj.at(key);
}

double as_number(const json &v, const std::string &key) {
    if (!v.is_number()) {
        throw ConfigError("'" + key + "' must be a number");
    }
    return v.get<double>();
}

std::uint64_t as_count(const json &v, const std::string &key) {
    if (!v.is_number_integer() || (v.is_number_integer() && v.get<std::int64_t>() < 0)) {
        throw ConfigError("'" + key + "' must be a non-negative integer");
    }
    return v.get<std::uint64_t>();
}

std::string as_string(const json &v, const std::string &key) {
    if (!v.is_string()) {
        throw ConfigError("'" + key + "' must be a string");
    }
    return v.get<std::string>();
}

dqgm::TargetDistribution target_from_json(const json &obj) {
    reject_unknown(obj, {"kind", "mu", "sigma", "s0", "t"}, "target");
    dqgm::TargetDistribution target;
    const auto kind = as_string(require(obj, "kind", "target"), "kind");
    if (kind == "linear") {
        target.kind = dqgm::TargetDistribution::Kind::linear;
        if (obj.size() != 1) {
            throw ConfigError("linear target takes no parameters");
        }
    } else if (kind == "lognormal") {
        target.kind = dqgm::TargetDistribution::Kind::lognormal;
        target.mu = as_number(require(obj, "mu", "target"), "mu");
        target.sigma = as_number(require(obj, "sigma", "target"), "sigma");
        target.s0 = as_number(require(obj, "s0", "target"), "s0");
        target.t = as_number(require(obj, "t", "target"), "t");
    } else {
        throw ConfigError("unknown target kind '" + kind + "'");
    }
    target.validate();
    return target;
}

json target_to_json(const dqgm::TargetDistribution &t) {
    if (t.kind == dqgm::TargetDistribution::Kind::linear) {
        return json{{"kind", "linear"}};
    }
    return json{{"kind", "lognormal"}, {"mu", t.mu}, {"sigma", t.sigma}, {"s0", t.s0}, {"t", t.t}};
}

const char *grid_name(dqgm::GridKind g) {
    return g == dqgm::GridKind::nodes ? "nodes" : "nodes_and_midpoints";
}

} // namespace

dqgm::TrainingConfig config_from_json(const json &doc) {
    const std::string where = "training config";
    reject_unknown(doc, {"qubits", "depth", "epochs", "learning_rate", "seed", "map", "grid",
                         "optimizer", "target"},
                   where);
    dqgm::TrainingConfig c;
    c.qubits = as_count(require(doc, "qubits", where), "qubits");
    c.depth = as_count(require(doc, "depth", where), "depth");
    c.epochs = as_count(require(doc, "epochs", where), "epochs");
    c.learning_rate = as_number(require(doc, "learning_rate", where), "learning_rate");
    c.target = target_from_json(require(doc, "target", where));
    if (doc.contains("seed")) {
        c.seed = as_count(doc.at("seed"), "seed");
    }
    if (doc.contains("map")) {
        c.map = enc::parse_map_kind(as_string(doc.at("map"), "map"));
    }
    if (doc.contains("grid")) {
        const auto g = as_string(doc.at("grid"), "grid");
        if (g == "nodes") {
            c.grid = dqgm::GridKind::nodes;
        } else if (g == "nodes_and_midpoints") {
            c.grid = dqgm::GridKind::nodes_and_midpoints;
        } else {
            throw ConfigError("unknown grid '" + g + "'");
        }
    }
    if (doc.contains("optimizer")) {
        const auto &o = doc.at("optimizer");
        reject_unknown(o, {"kind", "beta1", "beta2", "epsilon"}, "optimizer");
        if (o.contains("kind")) {
            const auto k = as_string(o.at("kind"), "kind");
            if (k == "adam") {
                c.optimizer.kind = dqgm::OptimizerKind::adam;
            } else if (k == "gd") {
                c.optimizer.kind = dqgm::OptimizerKind::gd;
            } else {
                throw ConfigError("unknown optimizer '" + k + "'");
            }
        }
        if (o.contains("beta1")) {
            c.optimizer.beta1 = as_number(o.at("beta1"), "beta1");
        }
        if (o.contains("beta2")) {
            c.optimizer.beta2 = as_number(o.at("beta2"), "beta2");
        }
        if (o.contains("epsilon")) {
            c.optimizer.epsilon = as_number(o.at("epsilon"), "epsilon");
        }
    }
    c.validate();
    return c;
}

json config_to_json(const dqgm::TrainingConfig &c) {
    json opt{{"kind", c.optimizer.kind == dqgm::OptimizerKind::adam ? "adam" : "gd"}};
    if (c.optimizer.kind == dqgm::OptimizerKind::adam) {
        opt["beta1"] = c.optimizer.beta1;
        opt["beta2"] = c.optimizer.beta2;
        opt["epsilon"] = c.optimizer.epsilon;
    }
    return json{{"qubits", c.qubits},
                {"depth", c.depth},
                {"epochs", c.epochs},
                {"learning_rate", c.learning_rate},
                {"seed", c.seed},
                {"map", enc::to_string(c.map)},
                {"grid", grid_name(c.grid)},
                {"optimizer", std::move(opt)},
                {"target", target_to_json(c.target)}};
}

std::string content_hash(const json &doc) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char ch : doc.dump()) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

json model_to_json(const ModelFile &model) {
    const auto &p = model.params;
    json ansatz{{"qubits", p.ansatz.n_qubits},
                {"depth", p.ansatz.depth},
                {"layer", {"RY", "RZ"}},
                {"entangler", "cnot_chain"},
                {"final_rotation_layer", true},
                {"parameter_count", p.ansatz.parameter_count()}};
    return json{{"format", "qcheb-model"},
                {"version", 1},
                {"map", enc::to_string(p.map)},
                {"ansatz", std::move(ansatz)},
                {"theta", p.theta},
                {"config", config_to_json(model.config)},
                {"config_hash", model.config_hash},
                {"final_loss", model.final_loss}};
}

ModelFile model_from_json(const json &doc) {
    const std::string where = "model file";
    reject_unknown(doc, {"format", "version", "map", "ansatz", "theta", "config", "config_hash",
                         "final_loss"},
                   where);
    if (as_string(require(doc, "format", where), "format") != "qcheb-model") {
        throw ConfigError("not a qcheb model file");
    }
    if (as_count(require(doc, "version", where), "version") != 1) {
        throw ConfigError("unsupported model file version");
    }
    ModelFile m;
    m.config = config_from_json(require(doc, "config", where));
    m.params.map = enc::parse_map_kind(as_string(require(doc, "map", where), "map"));

    const auto &a = require(doc, "ansatz", where);
    reject_unknown(a, {"qubits", "depth", "layer", "entangler", "final_rotation_layer",
                       "parameter_count"},
                   "ansatz");
    m.params.ansatz.n_qubits = as_count(require(a, "qubits", "ansatz"), "qubits");
    m.params.ansatz.depth = as_count(require(a, "depth", "ansatz"), "depth");
    if (a.contains("layer") && a.at("layer") != json{"RY", "RZ"}) {
        throw ConfigError("unsupported ansatz layer structure");
    }
    if (a.contains("entangler") && a.at("entangler") != "cnot_chain") {
        throw ConfigError("unsupported ansatz entangler");
    }

    const auto &th = require(doc, "theta", where);
    if (!th.is_array()) {
        throw ConfigError("'theta' must be an array");
    }
    for (const auto &v : th) {
        m.params.theta.push_back(as_number(v, "theta"));
    }
    if (doc.contains("config_hash")) {
        m.config_hash = as_string(doc.at("config_hash"), "config_hash");
    }
    if (doc.contains("final_loss")) {
        m.final_loss = as_number(doc.at("final_loss"), "final_loss");
    }
    if (m.params.ansatz.n_qubits != m.config.qubits || m.params.ansatz.depth != m.config.depth ||
        m.params.map != m.config.map) {
        throw ConfigError("model ansatz does not match its embedded config");
    }
    try {
        m.params.validate();
    } catch (const UsageError &e) {
        throw ConfigError(e.what());
    }
    return m;
}

json read_json(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open " + path.string());
    }
    try {
        return json::parse(in);
    } catch (const json::exception &e) {
        throw ConfigError(path.string() + ": " + e.what());
    }
}

void write_json(const std::filesystem::path &path, const json &doc) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot write " + path.string());
    }
    out << doc.dump(2) << '\n';
    if (!out) {
        throw IoError("write failed for " + path.string());
    }
}

} // namespace qcheb::cli
