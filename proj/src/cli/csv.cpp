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
#include "qcheb/cli/csv.hpp"

#include <cstdio>

#include "qcheb/errors.hpp"

namespace qcheb::cli {

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

CsvWriter::CsvWriter(const std::filesystem::path &path, std::string_view config_hash,
                     const std::vector<std::string> &header,
                     const std::vector<std::string> &comments)
    : path_(path), out_(path, std::ios::binary) {
    if (!out_) {
        throw IoError("cannot write " + path.string());
    }
    out_ << "# qcheb " << QCHEB_VERSION << " config=" << config_hash << '\n';
    for (const auto &c : comments) {
        out_ << "# " << c << '\n';
    }
    row(header);
}

void CsvWriter::row(const std::vector<std::string> &fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i > 0) {
            out_ << ',';
        }
        out_ << fields[i];
    }
    out_ << '\n';
}

void CsvWriter::close() {
    out_.flush();
    if (!out_) {
        throw IoError("write failed for " + path_.string());
    }
    out_.close();
}

} // namespace qcheb::cli
