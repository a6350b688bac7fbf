// Copyright 2026 The Erasure Threshold Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ERASURE_CLI_H
#define ERASURE_CLI_H

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "erasure/rational.h"

namespace erasure {

/// Provenance record attached to every command output.
struct RunManifest {
    std::string command;
    std::string model;
    nlohmann::json parameters = nlohmann::json::object();
    std::string circuit_config_hash;
    std::string tool_version;
    /// UTC ISO-8601. Taken from SOURCE_DATE_EPOCH when set so reruns are
    /// byte-identical.
    std::string timestamp;

    nlohmann::json to_json() const;
};

std::string tool_version();

/// Comma list ("0.01,0.05") or inclusive range "lo:hi:step", parsed exactly.
std::vector<Rational> parse_grid(const std::string &text);

/// Runs one command. args excludes the program name. Returns the exit code:
/// 0 on success, 1 on a computation error, 2 on a usage error. Errors are
/// written to err as a single JSON object.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace erasure

#endif
