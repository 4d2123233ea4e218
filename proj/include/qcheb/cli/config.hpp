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

/**
 * @file config.hpp
 * JSON documents read and written by the command-line tool: the training
 * configuration (see docs/formats.md) and the trained-model file.
 * Unknown keys and wrong types are rejected with ConfigError.
 */

#include <cstdint>
#include <filesystem>
#include <string>

#include <json.hpp>

#include "qcheb/dqgm/training.hpp"

namespace qcheb::cli {

using json = nlohmann::json;

dqgm::TrainingConfig config_from_json(const json &doc);

/// Canonical form of a config, with every default spelled out.
json config_to_json(const dqgm::TrainingConfig &config);

/// FNV-1a 64 of the compact dump of `doc`, as 16 hex digits.
std::string content_hash(const json &doc);

struct ModelFile {
    dqgm::ModelParams params;
    dqgm::TrainingConfig config;
    std::string config_hash;
    double final_loss = 0.0;
};

json model_to_json(const ModelFile &model);

ModelFile model_from_json(const json &doc);

/// Reads and parses a JSON file; IoError if unreadable, ConfigError if malformed.
json read_json(const std::filesystem::path &path);

/// Writes `doc` with two-space indentation and a trailing newline.
void write_json(const std::filesystem::path &path, const json &doc);

} // namespace qcheb::cli
