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

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "udmlab/gates.hpp"

namespace udmlab {

enum class GateKind { H, X, CPHASE, SWAP };

std::string to_string(GateKind kind);
GateKind gate_kind_from_string(const std::string& name);

/// A gate placed on specific qubits (0-based, qubit 0 most significant).
/// `position` is the sequence index within the circuit.
struct PlacedGate {
    GateKind kind = GateKind::H;
    std::vector<int> qubits;
    std::optional<double> phi;  // CPHASE only
    int position = 0;

    Gate gate() const;
};

class Circuit {
public:
    explicit Circuit(int n_qubits);

    int n_qubits() const { return n_qubits_; }
    const std::vector<PlacedGate>& gates() const { return gates_; }

    Circuit& h(int q);
    Circuit& x(int q);
    Circuit& cphase(int control, int target, double phi);
    Circuit& swap(int a, int b);
    Circuit& add(GateKind kind, std::vector<int> qubits, std::optional<double> phi = std::nullopt);

private:
    int n_qubits_;
    std::vector<PlacedGate> gates_;
};

/// Hadamard on j, then C_{pi / 2^(k-j)} from every k > j onto j, for each j;
/// finishes with floor(n/2) SWAPs reversing the qubit order.
Circuit build_qft(int n);

/// 2^n x 2^n DFT matrix, entries exp(2 pi i jk / 2^n) / 2^(n/2).
Matrix dft_matrix(int n);

/// Lifts a 1- or 2-qubit unitary acting on `qubits` to the full register.
Matrix embed(const Matrix& u, std::span<const int> qubits, int n_qubits);

Matrix circuit_unitary(const Circuit& c);

enum class AuditMeasure {
    pair_negativity,      // two-qubit gates: negativity of the touched pair's reduced state
    qubit_linear_entropy  // one-qubit gates: 2 (1 - tr rho_q^2), zero iff q is product with the rest
};

struct AuditRecord {
    int position = 0;
    std::string gate;
    std::vector<int> qubits;
    AuditMeasure measure = AuditMeasure::pair_negativity;
    double input_value = 0.0;
    double output_value = 0.0;
    bool input_entangled = false;
    bool output_entangled = false;
};

struct BlockAudit {
    std::vector<AuditRecord> records;
    bool all_separable() const;
};

struct CircuitRun {
    PureState output;
    BlockAudit audit;
};

CircuitRun run_circuit(const Circuit& c, const PureState& input,
                       double tol = kDefaultTolerances.separable);

/// {"n_qubits": n, "gates": [{"name": "H"|"CPHASE"|"SWAP"|"X", "qubits": [...], "phi": x}]}
nlohmann::json circuit_to_json(const Circuit& c);
Circuit circuit_from_json(const nlohmann::json& j);

}  // namespace udmlab
