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

#include "udmlab/gates.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <numbers>

namespace udmlab {

namespace {

constexpr double kPi = std::numbers::pi;

int qubits_for(const Matrix& m) {
    if (m.rows() == 2 && m.cols() == 2)
        return 1;
    if (m.rows() == 4 && m.cols() == 4)
        return 2;
    throw InputError("gate: generator must be 2x2 or 4x4, got " + std::to_string(m.rows()) + "x" +
                     std::to_string(m.cols()));
}

// Wraps kappa * t into (-pi, pi]. Values within 1e-12 of -pi snap to +pi so
// that -1 eigenvalues always map to the same branch.
double wrap_rotation(double x) {
    x = std::remainder(x, 2.0 * kPi);
    if (x <= -kPi + 1e-12)
        x += 2.0 * kPi;
    return x;
}

}  // namespace

Gate::Gate(Matrix generator, double duration, const Tolerances& tol) : duration_(duration) {
    n_qubits_ = qubits_for(generator);
    linalg::require_hermitian(generator, tol.hermitian, "gate generator");
    if (!(duration > 0.0) || !std::isfinite(duration))
        throw InputError("gate: duration must be positive and finite");
    generator_ = (generator + generator.adjoint()) / 2.0;
    unitary_ = linalg::matexp_hermitian(generator_, duration_);
    if (linalg::unitarity_defect(unitary_) > tol.unitary)
        throw InvariantError("gate: exponential is not unitary");
}

Matrix Gate::unitary_at(double t) const {
    return linalg::matexp_hermitian(generator_, t);
}

Gate gate_from_generator(const Matrix& k, double t_star) {
    return Gate(k, t_star);
}

Matrix generator_from_unitary(const Matrix& u, double t_star, const Tolerances& tol) {
    linalg::require_unitary(u, tol.unitary, "generator_from_unitary");
    if (!(t_star > 0.0))
        throw InputError("generator_from_unitary: duration must be positive");
    // Unitaries are normal, so the Schur form is diagonal up to rounding and
    // the Schur vectors are an orthonormal eigenbasis even on degenerate
    // eigenspaces.
    Eigen::ComplexSchur<Matrix> schur(u);
    const Matrix& q = schur.matrixU();
    const Matrix& t = schur.matrixT();
    RealVector kappa(u.rows());
    for (Eigen::Index i = 0; i < u.rows(); ++i)
        kappa(i) = wrap_rotation(-std::arg(t(i, i))) / t_star;
    Matrix k = q * kappa.cast<Complex>().asDiagonal() * q.adjoint();
    return (k + k.adjoint()) / 2.0;
}

Gate gate_from_unitary(const Matrix& u, double t_star) {
    return Gate(generator_from_unitary(u, t_star), t_star);
}

namespace paulis {
Matrix identity() { return Matrix::Identity(2, 2); }
Matrix x() { return Matrix{{0.0, 1.0}, {1.0, 0.0}}; }
Matrix y() { return Matrix{{0.0, Complex(0, -1)}, {Complex(0, 1), 0.0}}; }
Matrix z() { return Matrix{{1.0, 0.0}, {0.0, -1.0}}; }
}  // namespace paulis

Gate c_phase(double phi, double duration) {
    // exp(-i K t*) = diag(1, 1, 1, e^{i phi}) fixes K = -phi'/t* |11><11|,
    // with -phi' the principal rotation in (-pi, pi].
    Matrix k = Matrix::Zero(4, 4);
    k(3, 3) = wrap_rotation(-phi) / duration;
    return Gate(k, duration);
}

Gate identity_gate(int n_qubits) {
    if (n_qubits != 1 && n_qubits != 2)
        throw InputError("identity_gate: 1 or 2 qubits");
    const Eigen::Index dim = n_qubits == 1 ? 2 : 4;
    return Gate(Matrix::Zero(dim, dim), 1.0);
}

Gate pauli_x() { return gate_from_unitary(paulis::x()); }
Gate pauli_z() { return gate_from_unitary(paulis::z()); }

Gate hadamard() {
    return gate_from_unitary((paulis::x() + paulis::z()) / std::sqrt(2.0));
}

Gate phase(double phi) {
    Matrix k = Matrix::Zero(2, 2);
    k(1, 1) = wrap_rotation(-phi);
    return Gate(k, 1.0);
}

Gate swap_gate() {
    Matrix s = Matrix::Zero(4, 4);
    s(0, 0) = s(1, 2) = s(2, 1) = s(3, 3) = 1.0;
    return gate_from_unitary(s);
}

Gate tensor(const Gate& a, const Gate& b) {
    if (a.n_qubits() != 1 || b.n_qubits() != 1)
        throw InputError("tensor: both gates must act on one qubit");
    const Matrix id = Matrix::Identity(2, 2);
    const double scale = b.duration() / a.duration();
    const Matrix k = linalg::kron(a.generator(), id) + scale * linalg::kron(id, b.generator());
    return Gate(k, a.duration());
}

PureState apply(const Gate& g, const PureState& psi) {
    if (g.n_qubits() != psi.n_qubits())
        throw InputError("apply: gate acts on " + std::to_string(g.n_qubits()) +
                         " qubit(s), state has " + std::to_string(psi.n_qubits()));
    return PureState::normalized(g.unitary() * psi.amplitudes());
}

DensityMatrix apply(const Gate& g, const DensityMatrix& rho) {
    if (g.n_qubits() != rho.n_qubits())
        throw InputError("apply: gate acts on " + std::to_string(g.n_qubits()) +
                         " qubit(s), state has " + std::to_string(rho.n_qubits()));
    return DensityMatrix(g.unitary() * rho.matrix() * g.unitary().adjoint());
}

Matrix reshuffle(const Matrix& u) {
    if (u.rows() != 4 || u.cols() != 4)
        throw InputError("reshuffle: expected a 4x4 operator");
    Matrix r(4, 4);
    for (int i1 = 0; i1 < 2; ++i1)
        for (int i2 = 0; i2 < 2; ++i2)
            for (int j1 = 0; j1 < 2; ++j1)
                for (int j2 = 0; j2 < 2; ++j2)
                    r(2 * i1 + j1, 2 * i2 + j2) = u(2 * i1 + i2, 2 * j1 + j2);
    return r;
}

EntanglingVerdict is_entangling(const Gate& g, double tol) {
    if (g.n_qubits() != 2)
        throw InputError("is_entangling: expected a two-qubit gate");
    const auto dec = linalg::svd(reshuffle(g.unitary()));
    EntanglingVerdict out;
    out.schmidt_values = dec.values;
    const double smax = dec.values(0);
    for (Eigen::Index i = 0; i < dec.values.size(); ++i)
        if (dec.values(i) > tol * smax)
            ++out.operator_schmidt_rank;
    out.entangling = out.operator_schmidt_rank > 1;
    return out;
}

bool equal_up_to_phase(const Matrix& a, const Matrix& b, double tol) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        return false;
    Eigen::Index r = 0, c = 0;
    const double bmax = b.cwiseAbs().maxCoeff(&r, &c);
    if (bmax == 0.0)
        return a.norm() <= tol;
    const Complex ratio = a(r, c) / b(r, c);
    if (std::abs(ratio) == 0.0)
        return false;
    const Complex phase = ratio / std::abs(ratio);
    return (a - phase * b).norm() <= tol;
}

}  // namespace udmlab
