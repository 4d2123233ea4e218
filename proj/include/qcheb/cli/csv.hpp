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

#include <filesystem>
#include <fstream>
#include <string>
#include <string_view>
#include <vector>

namespace qcheb::cli {

/// Shortest-round-trip-safe decimal ("%.17g").
std::string format_double(double v);

/**
 * CSV output with a leading comment line
 *   # qcheb <version> config=<hash>
 * followed by optional extra comment lines and the header row.
 */
class CsvWriter {
  public:
    CsvWriter(const std::filesystem::path &path, std::string_view config_hash,
              const std::vector<std::string> &header,
              const std::vector<std::string> &comments = {});

    void row(const std::vector<std::string> &fields);

    /// Flushes and reports write errors as IoError.
    void close();

  private:
    std::filesystem::path path_;
    std::ofstream out_;
};

} // namespace qcheb::cli
