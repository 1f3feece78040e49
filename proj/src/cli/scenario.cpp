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

#include "udmlab/cli/scenario.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string_view>
#include <utility>

#include "udmlab/cli/report.hpp"
#include "udmlab/format.hpp"

namespace udmlab::cli {

namespace {

using nlohmann::json;

constexpr std::array<std::pair<const char*, double Tolerances::*>, 12> kToleranceFields{{
    {"hermitian", &Tolerances::hermitian},
    {"unitary", &Tolerances::unitary},
    {"reconstruction", &Tolerances::reconstruction},
    {"normalization", &Tolerances::normalization},
    {"positivity", &Tolerances::positivity},
    {"entanglement", &Tolerances::entanglement},
    {"separable", &Tolerances::separable},
    {"cp", &Tolerances::cp},
    {"pinv_cutoff", &Tolerances::pinv_cutoff},
    {"kraus_cutoff", &Tolerances::kraus_cutoff},
    {"witness", &Tolerances::witness},
    {"schmidt", &Tolerances::schmidt},
}};

void set_tolerance(Tolerances& tol, const std::string& key, double value, const std::string& where) {
    if (!std::isfinite(value) || value < 0.0)
        throw InputError(where + ": tolerance '" + key + "' must be a nonnegative number");
    for (const auto& [name, member] : kToleranceFields) {
        if (key == name) {
            tol.*member = value;
            return;
        }
    }
    throw InputError(where + ": unknown tolerance '" + key + "'");
}

double number_at(const json& j, const std::string& key, const std::string& path) {
    if (!j.contains(key))
        throw InputError(path + "." + key + ": missing");
    if (!j[key].is_number())
        throw InputError(path + "." + key + ": expected a number");
    const double v = j[key].get<double>();
    if (!std::isfinite(v))
        throw InputError(path + "." + key + ": must be finite");
    return v;
}

double number_or(const json& j, const std::string& key, double fallback, const std::string& path) {
    return j.contains(key) ? number_at(j, key, path) : fallback;
}

Complex parse_complex(const json& j, const std::string& path) {
    if (j.is_number())
        return {j.get<double>(), 0.0};
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
        return {j[0].get<double>(), j[1].get<double>()};
    throw InputError(path + ": expected a number or a [re, im] pair");
}

Matrix parse_matrix(const json& j, const std::string& path) {
    if (!j.is_array() || j.empty())
        throw InputError(path + ": expected a non-empty array of rows");
    const auto rows = static_cast<Eigen::Index>(j.size());
    if (!j[0].is_array())
        throw InputError(path + "[0]: expected an array");
    const auto cols = static_cast<Eigen::Index>(j[0].size());
    Matrix m(rows, cols);
    for (Eigen::Index r = 0; r < rows; ++r) {
        const auto& row = j[static_cast<size_t>(r)];
        const std::string rpath = path + "[" + std::to_string(r) + "]";
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols)
            throw InputError(rpath + ": rows must all have " + std::to_string(cols) + " entries");
        for (Eigen::Index c = 0; c < cols; ++c)
            m(r, c) = parse_complex(row[static_cast<size_t>(c)], rpath + "[" + std::to_string(c) + "]");
    }
    if (!m.allFinite())
        throw InputError(path + ": non-finite entry");
    return m;
}

Vector parse_vector(const json& j, const std::string& path) {
    if (!j.is_array() || j.empty())
        throw InputError(path + ": expected a non-empty array");
    Vector v(static_cast<Eigen::Index>(j.size()));
    for (size_t i = 0; i < j.size(); ++i)
        v(static_cast<Eigen::Index>(i)) = parse_complex(j[i], path + "[" + std::to_string(i) + "]");
    return v;
}

Matrix pauli_matrix(char c, const std::string& path) {
    switch (c) {
        case 'I': return paulis::identity();
        case 'X': return paulis::x();
        case 'Y': return paulis::y();
        case 'Z': return paulis::z();
        default: throw InputError(path + ": Pauli labels use I, X, Y, Z");
    }
}

std::pair<std::string, Gate> parse_generator(const json& j) {
    const std::string path = "generator";
    if (!j.is_object())
        throw InputError(path + ": expected an object");
    const double duration = number_or(j, "duration", 1.0, path);
    if (!(duration > 0.0))
        throw InputError(path + ".duration: must be positive");

    try {
        if (j.contains("gate")) {
            if (!j["gate"].is_string())
                throw InputError(path + ".gate: expected a string");
            const auto name = j["gate"].get<std::string>();
            if (name == "CPHASE") {
                const double phi = number_at(j, "phi", path);
                return {"CPHASE(phi=" + format_number(phi) + ")", c_phase(phi, duration)};
            }
            if (name == "LOCAL_PHASE") {
                // 1 (x) diag(1, e^{i phi}), generator rescaled to the duration
                const double phi = number_at(j, "phi", path);
                const Gate local = tensor(identity_gate(1), phase(phi));
                return {"LOCAL_PHASE(phi=" + format_number(phi) + ")",
                        Gate(local.generator() / duration, duration)};
            }
            if (name == "SWAP")
                return {"SWAP", gate_from_unitary(swap_gate().unitary(), duration)};
            if (name == "IDENTITY")
                return {"IDENTITY", Gate(Matrix::Zero(4, 4), duration)};
            throw InputError(path + ".gate: unknown gate '" + name +
                             "' (expected CPHASE, LOCAL_PHASE, SWAP or IDENTITY)");
        }
        if (j.contains("pauli")) {
            if (!j["pauli"].is_string() || j["pauli"].get<std::string>().size() != 2)
                throw InputError(path + ".pauli: expected a two-letter label such as \"ZI\"");
            const auto label = j["pauli"].get<std::string>();
            const double coeff = number_or(j, "coefficient", 1.0, path);
            const Matrix k = coeff * linalg::kron(pauli_matrix(label[0], path + ".pauli"),
                                                  pauli_matrix(label[1], path + ".pauli"));
            return {"PAULI(" + label + ",coefficient=" + format_number(coeff) + ")", Gate(k, duration)};
        }
        if (j.contains("matrix")) {
            const Matrix k = parse_matrix(j["matrix"], path + ".matrix");
            if (k.rows() != 4 || k.cols() != 4)
                throw InputError(path + ".matrix: expected a 4x4 Hermitian matrix");
            linalg::require_hermitian(k, kDefaultTolerances.hermitian, path + ".matrix");
            return {"MATRIX", Gate(k, duration)};
        }
    } catch (const InvariantError& e) {
        throw InputError(path + ": " + e.what());
    }
    throw InputError(path + ": needs one of 'gate', 'pauli' or 'matrix'");
}

InputSpec parse_input(const json& j) {
    const std::string path = "input";
    if (!j.is_object())
        throw InputError(path + ": expected an object");
    InputSpec spec;
    if (j.contains("amplitudes")) {
        const Vector v = parse_vector(j["amplitudes"], path + ".amplitudes");
        if (v.size() != 4)
            throw InputError(path + ".amplitudes: expected 4 amplitudes for two qubits");
        try {
            spec.state = PureState(v);
        } catch (const InputError& e) {
            throw InputError(path + ".amplitudes: " + e.what());
        }
        spec.label = "amplitudes";
        if (is_separable_pure(spec.state, 1e-12)) {
            const int q0 = 0, q1 = 1;
            spec.first = purify(reduced(spec.state, std::span<const int>(&q0, 1)));
            spec.second = purify(reduced(spec.state, std::span<const int>(&q1, 1)));
        }
        return spec;
    }
    const auto label_at = [&](const char* key) {
        if (!j.contains(key))
            return std::string("0");
        if (!j[key].is_string())
            throw InputError(path + "." + key + ": expected a state label");
        return j[key].get<std::string>();
    };
    const std::string l1 = label_at("qubit1");
    const std::string l2 = label_at("qubit2");
    try {
        spec.first = named_state(l1);
        spec.second = named_state(l2);
    } catch (const InputError& e) {
        throw InputError(path + ": " + e.what());
    }
    spec.state = tensor(*spec.first, *spec.second);
    spec.label = "|" + l1 + "," + l2 + ">";
    return spec;
}

TimeGrid parse_grid(const json& j) {
    const std::string path = "grid";
    if (!j.is_object())
        throw InputError(path + ": expected an object");
    const double t0 = number_or(j, "t_start", 0.0, path);
    const double t1 = number_at(j, "t_end", path);
    int steps = 100;
    if (j.contains("steps")) {
        if (!j["steps"].is_number_integer())
            throw InputError(path + ".steps: expected an integer");
        steps = j["steps"].get<int>();
    }
    try {
        return TimeGrid(t0, t1, steps);
    } catch (const InputError& e) {
        throw InputError(path + ": " + e.what());
    }
}

QftSpec parse_qft(const json& j) {
    const std::string path = "qft";
    if (!j.is_object())
        throw InputError(path + ": expected an object");
    QftSpec spec;
    if (!j.contains("n") || !j["n"].is_number_integer())
        throw InputError(path + ".n: expected an integer");
    spec.n = j["n"].get<int>();
    if (spec.n < 2 || spec.n > 8)
        throw InputError(path + ".n: must be in 2..8");
    spec.label = std::string(static_cast<size_t>(spec.n), '0');
    if (j.contains("input")) {
        if (!j["input"].is_string())
            throw InputError(path + ".input: expected a bit string");
        spec.label = j["input"].get<std::string>();
        if (spec.label.size() != static_cast<size_t>(spec.n))
            throw InputError(path + ".input: bit string length must equal n");
        spec.input = PureState::basis(spec.label);
    } else if (j.contains("amplitudes")) {
        const Vector v = parse_vector(j["amplitudes"], path + ".amplitudes");
        if (v.size() != (Eigen::Index{1} << spec.n))
            throw InputError(path + ".amplitudes: expected 2^n amplitudes");
        try {
            spec.input = PureState(v);
        } catch (const InputError& e) {
            throw InputError(path + ".amplitudes: " + e.what());
        }
        spec.label = "amplitudes";
    }
    return spec;
}

}  // namespace

const Gate& Scenario::require_gate() const {
    if (!gate)
        throw InputError("scenario: this command needs a 'generator'");
    return *gate;
}

TimeGrid Scenario::effective_grid() const {
    if (grid)
        return *grid;
    return TimeGrid(0.0, gate ? gate->duration() : 1.0, 100);
}

Scenario parse_scenario(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        size_t line = 1, column = 1;
        for (size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw InputError("scenario line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": JSON syntax error (" + e.what() + ")");
    }
    if (!j.is_object())
        throw InputError("scenario: top level must be a JSON object");

    static constexpr std::array<std::string_view, 7> known{"generator", "input", "grid", "t1",
                                                           "tolerances", "seed", "qft"};
    for (const auto& item : j.items()) {
        if (std::find(known.begin(), known.end(), item.key()) == known.end())
            throw InputError("scenario: unknown field '" + item.key() + "'");
    }

    Scenario s;
    if (j.contains("generator")) {
        auto [label, gate] = parse_generator(j["generator"]);
        if (gate.n_qubits() != 2)
            throw InputError("generator: must act on two qubits");
        s.generator_label = label;
        s.gate = gate;
    }
    if (j.contains("input"))
        s.input = parse_input(j["input"]);
    if (j.contains("grid"))
        s.grid = parse_grid(j["grid"]);
    if (j.contains("t1"))
        s.t1 = number_at(j, "t1", "scenario");
    if (j.contains("tolerances")) {
        if (!j["tolerances"].is_object())
            throw InputError("tolerances: expected an object");
        for (const auto& item : j["tolerances"].items()) {
            if (!item.value().is_number())
                throw InputError("tolerances." + item.key() + ": expected a number");
            set_tolerance(s.tol, item.key(), item.value().get<double>(), "tolerances");
        }
    }
    if (j.contains("seed")) {
        if (!j["seed"].is_number_unsigned())
            throw InputError("seed: expected a nonnegative integer");
        s.seed = j["seed"].get<std::uint64_t>();
    }
    if (j.contains("qft"))
        s.qft = parse_qft(j["qft"]);
    return s;
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open scenario file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str());
}

void apply_tolerance_overrides(Tolerances& tol, const std::string& spec) {
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty())
            continue;
        const auto eq = item.find('=');
        if (eq == std::string::npos)
            throw InputError("tolerance override '" + item + "': expected key=value");
        const std::string key = item.substr(0, eq);
        const std::string value = item.substr(eq + 1);
        char* end = nullptr;
        const double v = std::strtod(value.c_str(), &end);
        if (value.empty() || end != value.c_str() + value.size())
            throw InputError("tolerance override '" + item + "': value is not a number");
        set_tolerance(tol, key, v, "tolerance override");
    }
}

nlohmann::json tolerances_to_json(const Tolerances& tol) {
    json out = json::object();
    for (const auto& [name, member] : kToleranceFields)
        out[name] = report::number(tol.*member);
    return out;
}

}  // namespace udmlab::cli
