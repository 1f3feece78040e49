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

#include "udmlab/circuits.hpp"

#include <cmath>
#include <numbers>

namespace udmlab {

std::string to_string(GateKind kind) {
    switch (kind) {
        case GateKind::H: return "H";
        case GateKind::X: return "X";
        case GateKind::CPHASE: return "CPHASE";
        case GateKind::SWAP: return "SWAP";
    }
    return "?";
}

GateKind gate_kind_from_string(const std::string& name) {
    if (name == "H")
        return GateKind::H;
    if (name == "X")
        return GateKind::X;
    if (name == "CPHASE")
        return GateKind::CPHASE;
    if (name == "SWAP")
        return GateKind::SWAP;
    throw InputError("unknown gate name '" + name + "' (expected H, X, CPHASE or SWAP)");
}

Gate PlacedGate::gate() const {
    switch (kind) {
        case GateKind::H: return hadamard();
        case GateKind::X: return pauli_x();
        case GateKind::CPHASE: return c_phase(phi.value_or(0.0));
        case GateKind::SWAP: return swap_gate();
    }
    throw InputError("PlacedGate: unknown gate kind");
}

Circuit::Circuit(int n_qubits) : n_qubits_(n_qubits) {
    if (n_qubits < 2 || n_qubits > 8)
        throw InputError("Circuit: qubit count must be in 2..8, got " + std::to_string(n_qubits));
}

Circuit& Circuit::add(GateKind kind, std::vector<int> qubits, std::optional<double> phi) {
    const size_t arity = (kind == GateKind::H || kind == GateKind::X) ? 1 : 2;
    if (qubits.size() != arity)
        throw InputError(to_string(kind) + " acts on " + std::to_string(arity) + " qubit(s), got " +
                         std::to_string(qubits.size()));
    for (int q : qubits)
        if (q < 0 || q >= n_qubits_)
            throw InputError(to_string(kind) + ": qubit index " + std::to_string(q) +
                             " out of range 0.." + std::to_string(n_qubits_ - 1));
    if (arity == 2 && qubits[0] == qubits[1])
        throw InputError(to_string(kind) + ": the two qubits must be distinct");
    if (kind == GateKind::CPHASE) {
        if (!phi || !std::isfinite(*phi))
            throw InputError("CPHASE requires a finite phi");
    } else if (phi) {
        throw InputError(to_string(kind) + " takes no phi");
    }
    gates_.push_back(PlacedGate{kind, std::move(qubits), phi, static_cast<int>(gates_.size())});
    return *this;
}

Circuit& Circuit::h(int q) { return add(GateKind::H, {q}); }
Circuit& Circuit::x(int q) { return add(GateKind::X, {q}); }
Circuit& Circuit::cphase(int control, int target, double phi) {
    return add(GateKind::CPHASE, {control, target}, phi);
}
Circuit& Circuit::swap(int a, int b) { return add(GateKind::SWAP, {a, b}); }

Circuit build_qft(int n) {
    if (n < 2 || n > 8)
        throw InputError("build_qft: n must be in 2..8, got " + std::to_string(n));
    Circuit c(n);
    for (int j = 0; j < n; ++j) {
        c.h(j);
        for (int k = j + 1; k < n; ++k)
            c.cphase(k, j, std::numbers::pi / static_cast<double>(1 << (k - j)));
    }
    for (int i = 0; i < n / 2; ++i)
        c.swap(i, n - 1 - i);
    return c;
}

Matrix dft_matrix(int n) {
    const Eigen::Index dim = Eigen::Index{1} << n;
    const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
    Matrix f(dim, dim);
    for (Eigen::Index j = 0; j < dim; ++j)
        for (Eigen::Index k = 0; k < dim; ++k) {
            // reduce jk mod dim before scaling to keep the angle small
            const auto jk = static_cast<double>((j * k) % dim);
            f(j, k) = std::polar(scale, 2.0 * std::numbers::pi * jk / static_cast<double>(dim));
        }
    return f;
}

Matrix embed(const Matrix& u, std::span<const int> qubits, int n_qubits) {
    const auto arity = static_cast<int>(qubits.size());
    const Eigen::Index gdim = Eigen::Index{1} << arity;
    if (u.rows() != gdim || u.cols() != gdim)
        throw InputError("embed: operator size does not match qubit list");
    const Eigen::Index dim = Eigen::Index{1} << n_qubits;
    const auto bit_of = [&](int s) { return Eigen::Index{1} << (n_qubits - 1 - qubits[static_cast<size_t>(s)]); };

    Eigen::Index mask = 0;
    for (int s = 0; s < arity; ++s)
        mask |= bit_of(s);

    Matrix full = Matrix::Zero(dim, dim);
    for (Eigen::Index col = 0; col < dim; ++col) {
        Eigen::Index local_col = 0;
        for (int s = 0; s < arity; ++s)
            local_col = (local_col << 1) | ((col & bit_of(s)) ? 1 : 0);
        for (Eigen::Index local_row = 0; local_row < gdim; ++local_row) {
            Eigen::Index row = col & ~mask;
            for (int s = 0; s < arity; ++s)
                if ((local_row >> (arity - 1 - s)) & 1)
                    row |= bit_of(s);
            full(row, col) = u(local_row, local_col);
        }
    }
    return full;
}

Matrix circuit_unitary(const Circuit& c) {
    const Eigen::Index dim = Eigen::Index{1} << c.n_qubits();
    Matrix u = Matrix::Identity(dim, dim);
    for (const auto& pg : c.gates())
        u = embed(pg.gate().unitary(), pg.qubits, c.n_qubits()) * u;
    return u;
}

bool BlockAudit::all_separable() const {
    for (const auto& r : records)
        if (r.input_entangled || r.output_entangled)
            return false;
    return true;
}

namespace {

double audit_value(const PureState& psi, const PlacedGate& pg) {
    const DensityMatrix local = reduced(psi, pg.qubits);
    if (pg.qubits.size() == 2)
        return negativity(local);
    return std::max(0.0, 2.0 * (1.0 - local.purity()));
}

}  // namespace

CircuitRun run_circuit(const Circuit& c, const PureState& input, double tol) {
    if (input.n_qubits() != c.n_qubits())
        throw InputError("run_circuit: circuit has " + std::to_string(c.n_qubits()) +
                         " qubits, input has " + std::to_string(input.n_qubits()));
    PureState psi = input;
    BlockAudit audit;
    for (const auto& pg : c.gates()) {
        AuditRecord rec;
        rec.position = pg.position;
        rec.gate = to_string(pg.kind);
        rec.qubits = pg.qubits;
        rec.measure = pg.qubits.size() == 2 ? AuditMeasure::pair_negativity
                                            : AuditMeasure::qubit_linear_entropy;
        rec.input_value = audit_value(psi, pg);
        psi = PureState::normalized(embed(pg.gate().unitary(), pg.qubits, c.n_qubits()) *
                                    psi.amplitudes());
        rec.output_value = audit_value(psi, pg);
        rec.input_entangled = rec.input_value > tol;
        rec.output_entangled = rec.output_value > tol;
        audit.records.push_back(std::move(rec));
    }
    return {psi, std::move(audit)};
}

nlohmann::json circuit_to_json(const Circuit& c) {
    nlohmann::json gates = nlohmann::json::array();
    for (const auto& pg : c.gates()) {
        nlohmann::json g{{"name", to_string(pg.kind)}, {"qubits", pg.qubits}};
        if (pg.phi)
            g["phi"] = *pg.phi;
        gates.push_back(std::move(g));
    }
    return {{"n_qubits", c.n_qubits()}, {"gates", std::move(gates)}};
}

Circuit circuit_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("n_qubits") || !j["n_qubits"].is_number_integer())
        throw InputError("circuit: missing integer field 'n_qubits'");
    if (!j.contains("gates") || !j["gates"].is_array())
        throw InputError("circuit: missing array field 'gates'");
    Circuit c(j["n_qubits"].get<int>());
    size_t index = 0;
    for (const auto& g : j["gates"]) {
        const std::string where = "circuit gate #" + std::to_string(index++) + ": ";
        if (!g.is_object() || !g.contains("name") || !g["name"].is_string())
            throw InputError(where + "missing string field 'name'");
        if (!g.contains("qubits") || !g["qubits"].is_array())
            throw InputError(where + "missing array field 'qubits'");
        std::vector<int> qubits;
        for (const auto& q : g["qubits"]) {
            if (!q.is_number_integer())
                throw InputError(where + "qubit indices must be integers");
            qubits.push_back(q.get<int>());
        }
        std::optional<double> phi;
        if (g.contains("phi")) {
            if (!g["phi"].is_number())
                throw InputError(where + "'phi' must be a number");
            phi = g["phi"].get<double>();
        }
        try {
            c.add(gate_kind_from_string(g["name"].get<std::string>()), std::move(qubits), phi);
        } catch (const InputError& e) {
            throw InputError(where + e.what());
        }
    }
    return c;
}

}  // namespace udmlab
