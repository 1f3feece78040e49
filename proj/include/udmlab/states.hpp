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

#include <array>
#include <string_view>
#include <vector>

#include "udmlab/linalg.hpp"
#include "udmlab/tolerances.hpp"

namespace udmlab {

/// Normalized pure state of n qubits. Qubit 0 is the most significant bit
/// of the amplitude index.
class PureState {
public:
    /// Takes amplitudes that are already normalized (within 1e-10) and
    /// rejects anything else.
    explicit PureState(Vector amplitudes);

    /// Normalizes arbitrary nonzero amplitudes.
    static PureState normalized(const Vector& amplitudes);

    /// |b_0 b_1 ... b_{n-1}> from a bit string such as "0110".
    static PureState basis(std::string_view bits);

    int n_qubits() const { return n_qubits_; }
    const Vector& amplitudes() const { return amplitudes_; }
    Complex operator[](Eigen::Index i) const { return amplitudes_(i); }

private:
    Vector amplitudes_;
    int n_qubits_ = 0;
};

/// Hermitian, unit-trace, positive semidefinite operator on n qubits.
class DensityMatrix {
public:
    /// Validates the invariants; throws InvariantError on violation.
    explicit DensityMatrix(Matrix m, const Tolerances& tol = kDefaultTolerances);

    int n_qubits() const { return n_qubits_; }
    const Matrix& matrix() const { return matrix_; }

    double purity() const;
    RealVector eigenvalues() const;

private:
    Matrix matrix_;
    int n_qubits_ = 0;
};

// Single-qubit stabilizer states.
namespace named {
PureState zero();
PureState one();
PureState plus();
PureState minus();
PureState plus_i();
PureState minus_i();
}  // namespace named

/// The six single-qubit stabilizer states in the order 0, 1, +, -, +i, -i.
const std::array<PureState, 6>& stabilizer_states();

/// Looks up "0", "1", "+", "-", "+i", "-i".
PureState named_state(std::string_view label);

PureState tensor(const PureState& a, const PureState& b);
DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);

DensityMatrix densify(const PureState& psi);

/// Two-qubit reduced state of a single-qubit factor.
DensityMatrix reduced(const DensityMatrix& rho, Qubit keep);

/// Reduced state of the listed (0-based) qubits of an n-qubit pure state.
DensityMatrix reduced(const PureState& psi, std::span<const int> keep);

/// |g00 g11 - g01 g10|; zero exactly when the amplitudes factor.
double pure_entanglement(const PureState& psi);

/// Schmidt coefficients (descending) of a two-qubit pure state.
std::array<double, 2> schmidt_coefficients(const PureState& psi);

/// Partial transpose over qubit 2 of a two-qubit operator.
Matrix partial_transpose(const Matrix& rho);

/// Sum of |negative eigenvalues| of the partial transpose.
double negativity(const DensityMatrix& rho);

bool is_separable_pure(const PureState& psi, double tol);

/// 0.5 * trace|a - b|
double trace_distance(const Matrix& a, const Matrix& b);

/// Whether a two-qubit density matrix equals the product of its marginals.
bool is_product(const DensityMatrix& rho, double tol);

}  // namespace udmlab
