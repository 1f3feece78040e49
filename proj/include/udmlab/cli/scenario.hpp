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

// Scenario files: the JSON input shared by every CLI command.
//
//   {
//     "generator": {"gate": "CPHASE", "phi": 3.14159, "duration": 1}
//                | {"gate": "LOCAL_PHASE" | "SWAP" | "IDENTITY", ...}
//                | {"pauli": "ZI", "coefficient": 1, "duration": 1}
//                | {"matrix": [[[re, im], ...], ...], "duration": 1},
//     "input": {"qubit1": "+", "qubit2": "+"} | {"amplitudes": [[re, im], ...]},
//     "grid": {"t_start": 0, "t_end": 1, "steps": 100},
//     "t1": 0.5,
//     "tolerances": {"cp": 1e-7, ...},
//     "seed": 7,
//     "qft": {"n": 3, "input": "000"}
//   }
//
// Every field is optional; commands complain about the ones they need.

#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "udmlab/dynamics.hpp"

namespace udmlab::cli {

struct InputSpec {
    std::string label = "|0,0>";        // qubit labels, or "amplitudes"
    PureState state = PureState::basis("00");
    std::optional<PureState> first;     // set when the input factors
    std::optional<PureState> second;
};

struct QftSpec {
    int n = 2;
    std::string label;
    std::optional<PureState> input;     // defaults to |0...0>
};

struct Scenario {
    std::optional<std::string> generator_label;
    std::optional<Gate> gate;           // generator + duration
    InputSpec input;
    std::optional<TimeGrid> grid;
    std::optional<double> t1;
    Tolerances tol;
    std::uint64_t seed = 0;
    std::optional<QftSpec> qft;

    const Gate& require_gate() const;
    /// Explicit grid, else [0, duration] with 100 steps.
    TimeGrid effective_grid() const;
};

/// Parses scenario text; InputError messages carry line/column for syntax
/// errors and the offending JSON path for semantic ones.
Scenario parse_scenario(const std::string& text);
Scenario load_scenario(const std::string& path);

/// Applies "key=value,key=value" tolerance overrides.
void apply_tolerance_overrides(Tolerances& tol, const std::string& spec);

nlohmann::json tolerances_to_json(const Tolerances& tol);

}  // namespace udmlab::cli
