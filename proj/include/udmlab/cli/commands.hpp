// Copyright 2026 The udmlab Authors
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

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "udmlab/cli/scenario.hpp"

namespace udmlab::cli {

/// Command-line overrides layered on top of a scenario.
struct Options {
    std::optional<int> steps;
    std::optional<double> tol_cp;
    std::optional<std::uint64_t> seed;
    std::optional<double> t1;
    std::optional<int> qft_n;
    std::optional<std::string> qft_input;
    std::optional<std::string> tol_override;  // value of UDMLAB_TOL_OVERRIDE
    bool both_qubits = false;
};

struct CommandResult {
    nlohmann::json report;
    std::optional<std::string> csv;
};

CommandResult cmd_analyze_gate(const Scenario& s, const Options& opt);
CommandResult cmd_trajectory(const Scenario& s, const Options& opt);
CommandResult cmd_map(const Scenario& s, const Options& opt);
CommandResult cmd_divisibility(const Scenario& s, const Options& opt);
CommandResult cmd_qft(const Scenario& s, const Options& opt);

/// Runs one command by name. Exit codes: 0 success, 2 input error,
/// 3 internal invariant violation.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace udmlab::cli
