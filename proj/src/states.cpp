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

#include "udmlab/states.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace udmlab {

namespace {

int qubits_for_dimension(Eigen::Index dim) {
    int n = 0;
    while ((Eigen::Index{1} << n) < dim)
        ++n;
    if ((Eigen::Index{1} << n) != dim || n < 1)
        return -1;
    return n;
}

void require_two_qubits(int n, const char* what) {
    if (n != 2)
        throw InputError(std::string(what) + ": expected a two-qubit state, got " +
                         std::to_string(n) + " qubit(s)");
}

}  // namespace

PureState::PureState(Vector amplitudes) : amplitudes_(std::move(amplitudes)) {
    linalg::require_finite(amplitudes_, "PureState");
    n_qubits_ = qubits_for_dimension(amplitudes_.size());
    if (n_qubits_ < 1)
        throw InputError("PureState: amplitude count " + std::to_string(amplitudes_.size()) +
                         " is not a power of two >= 2");
    const double norm = amplitudes_.norm();
    if (std::abs(norm - 1.0) > kDefaultTolerances.normalization)
        throw InputError("PureState: amplitudes are not normalized (norm = " +
                         std::to_string(norm) + ")");
}

PureState PureState::normalized(const Vector& amplitudes) {
    linalg::require_finite(amplitudes, "PureState");
    const double norm = amplitudes.norm();
    if (!(norm > 0.0))
        throw InputError("PureState: zero vector cannot be normalized");
    return PureState(amplitudes / norm);
}

PureState PureState::basis(std::string_view bits) {
    if (bits.empty() || bits.size() > 16)
        throw InputError("PureState::basis: bit string must have 1..16 characters");
    Eigen::Index idx = 0;
    for (char c : bits) {
        if (c != '0' && c != '1')
            throw InputError("PureState::basis: invalid character in bit string '" +
                             std::string(bits) + "'");
        idx = (idx << 1) | (c == '1' ? 1 : 0);
    }
    Vector v = Vector::Zero(Eigen::Index{1} << bits.size());
    v(idx) = 1.0;
    return PureState(std::move(v));
}

DensityMatrix::DensityMatrix(Matrix m, const Tolerances& tol) {
    linalg::require_finite(m, "DensityMatrix");
    if (m.rows() != m.cols())
        throw InvariantError("DensityMatrix: matrix is not square");
    n_qubits_ = qubits_for_dimension(m.rows());
    if (n_qubits_ < 1)
        throw InvariantError("DensityMatrix: dimension is not a power of two >= 2");
    const double herm = linalg::hermiticity_defect(m);
    if (herm > tol.hermitian)
        throw InvariantError("DensityMatrix: not Hermitian (defect " + std::to_string(herm) + ")");
    matrix_ = (m + m.adjoint()) / 2.0;
    const double tr = matrix_.trace().real();
    if (std::abs(tr - 1.0) > tol.normalization)
        throw InvariantError("DensityMatrix: trace is " + std::to_string(tr) + ", expected 1");
    const double min_eig = eigenvalues().minCoeff();
    if (min_eig < -tol.positivity)
        throw InvariantError("DensityMatrix: negative eigenvalue " + std::to_string(min_eig));
}

double DensityMatrix::purity() const {
    return (matrix_ * matrix_).trace().real();
}

RealVector DensityMatrix::eigenvalues() const {
    return linalg::hermitian_eig(matrix_).values;
}

namespace named {

PureState zero() { return PureState::basis("0"); }
PureState one() { return PureState::basis("1"); }

PureState plus() {
    return PureState::normalized(Vector{{Complex(1, 0), Complex(1, 0)}});
}
PureState minus() {
    return PureState::normalized(Vector{{Complex(1, 0), Complex(-1, 0)}});
}
PureState plus_i() {
    return PureState::normalized(Vector{{Complex(1, 0), Complex(0, 1)}});
}
PureState minus_i() {
    return PureState::normalized(Vector{{Complex(1, 0), Complex(0, -1)}});
}

}  // namespace named

const std::array<PureState, 6>& stabilizer_states() {
    static const std::array<PureState, 6> states{named::zero(),  named::one(),
                                                 named::plus(),  named::minus(),
                                                 named::plus_i(), named::minus_i()};
    return states;
}

PureState named_state(std::string_view label) {
    static constexpr std::array<std::string_view, 6> labels{"0", "1", "+", "-", "+i", "-i"};
    for (size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == label)
            return stabilizer_states()[i];
    throw InputError("unknown named state '" + std::string(label) +
                     "' (expected one of 0, 1, +, -, +i, -i)");
}

PureState tensor(const PureState& a, const PureState& b) {
    return PureState(linalg::kron(a.amplitudes(), b.amplitudes()));
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
    return DensityMatrix(linalg::kron(a.matrix(), b.matrix()));
}

DensityMatrix densify(const PureState& psi) {
    return DensityMatrix(psi.amplitudes() * psi.amplitudes().adjoint());
}

DensityMatrix reduced(const DensityMatrix& rho, Qubit keep) {
    require_two_qubits(rho.n_qubits(), "reduced");
    return DensityMatrix(linalg::partial_trace(rho.matrix(), keep));
}

DensityMatrix reduced(const PureState& psi, std::span<const int> keep) {
    const Matrix full = psi.amplitudes() * psi.amplitudes().adjoint();
    return DensityMatrix(linalg::partial_trace_qubits(full, psi.n_qubits(), keep));
}

double pure_entanglement(const PureState& psi) {
    require_two_qubits(psi.n_qubits(), "pure_entanglement");
    return std::abs(psi[0] * psi[3] - psi[1] * psi[2]);
}

std::array<double, 2> schmidt_coefficients(const PureState& psi) {
    require_two_qubits(psi.n_qubits(), "schmidt_coefficients");
    Matrix coeffs(2, 2);
    coeffs << psi[0], psi[1], psi[2], psi[3];
    const auto dec = linalg::svd(coeffs);
    return {dec.values(0), dec.values(1)};
}

Matrix partial_transpose(const Matrix& rho) {
    if (rho.rows() != 4 || rho.cols() != 4)
        throw InputError("partial_transpose: expected a 4x4 operator");
    Matrix out(4, 4);
    for (int a1 = 0; a1 < 2; ++a1)
        for (int a2 = 0; a2 < 2; ++a2)
            for (int b1 = 0; b1 < 2; ++b1)
                for (int b2 = 0; b2 < 2; ++b2)
                    out(2 * a1 + a2, 2 * b1 + b2) = rho(2 * a1 + b2, 2 * b1 + a2);
    return out;
}

double negativity(const DensityMatrix& rho) {
    require_two_qubits(rho.n_qubits(), "negativity");
    const auto eig = linalg::hermitian_eig(partial_transpose(rho.matrix()));
    double sum = 0.0;
    for (Eigen::Index i = 0; i < eig.values.size(); ++i)
        if (eig.values(i) < 0.0)
            sum -= eig.values(i);
    return sum;
}

bool is_separable_pure(const PureState& psi, double tol) {
    return pure_entanglement(psi) <= tol;
}

double trace_distance(const Matrix& a, const Matrix& b) {
    const Matrix diff = a - b;
    const auto eig = linalg::hermitian_eig(diff, 1e-9);
    return 0.5 * eig.values.cwiseAbs().sum();
}

bool is_product(const DensityMatrix& rho, double tol) {
    require_two_qubits(rho.n_qubits(), "is_product");
    const Matrix prod = linalg::kron(linalg::partial_trace(rho.matrix(), Qubit::first),
                                     linalg::partial_trace(rho.matrix(), Qubit::second));
    return (rho.matrix() - prod).cwiseAbs().maxCoeff() <= tol;
}

}  // namespace udmlab
