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

#include <string>
#include <vector>

#include "udmlab/states.hpp"

namespace udmlab {

/// A gate as the finite-time evolution exp(-i K t*) of a Hermitian
/// generator K over the operating duration t* (hbar = 1, t0 = 0).
class Gate {
public:
    Gate(Matrix generator, double duration, const Tolerances& tol = kDefaultTolerances);

    int n_qubits() const { return n_qubits_; }
    const Matrix& generator() const { return generator_; }
    double duration() const { return duration_; }
    const Matrix& unitary() const { return unitary_; }

    /// exp(-i K t) for an arbitrary time inside (or outside) the operating window.
    Matrix unitary_at(double t) const;

private:
    Matrix generator_;
    double duration_ = 1.0;
    Matrix unitary_;
    int n_qubits_ = 0;
};

Gate gate_from_generator(const Matrix& k, double t_star);

/// Principal logarithm: K = (i / t*) log(u) with eigenphases in (-pi, pi].
Matrix generator_from_unitary(const Matrix& u, double t_star,
                              const Tolerances& tol = kDefaultTolerances);

/// Gate whose unitary is u, generated by its principal logarithm.
Gate gate_from_unitary(const Matrix& u, double t_star = 1.0);

// Named gates. Their generators are principal logarithms, duration 1
// unless stated.
Gate c_phase(double phi, double duration = 1.0);
Gate identity_gate(int n_qubits);
Gate pauli_x();
Gate pauli_z();
Gate hadamard();
Gate phase(double phi);  // diag(1, e^{i phi})
Gate swap_gate();

/// a (x) b; the generator is K_a (x) 1 + 1 (x) K_b rescaled to a's duration.
Gate tensor(const Gate& a, const Gate& b);

namespace paulis {
Matrix identity();
Matrix x();
Matrix y();
Matrix z();
}  // namespace paulis

PureState apply(const Gate& g, const PureState& psi);
DensityMatrix apply(const Gate& g, const DensityMatrix& rho);

struct EntanglingVerdict {
    bool entangling = false;
    int operator_schmidt_rank = 0;
    RealVector schmidt_values;  // descending
};

/// Reshuffles a 2-qubit unitary so that U = sum_k s_k A_k (x) B_k becomes an
/// SVD; the operator is entangling iff more than one s_k survives.
Matrix reshuffle(const Matrix& u);
EntanglingVerdict is_entangling(const Gate& g, double tol = kDefaultTolerances.schmidt);

/// True iff some unit-modulus c makes ||a - c b||_F <= tol.
bool equal_up_to_phase(const Matrix& a, const Matrix& b, double tol);

}  // namespace udmlab
