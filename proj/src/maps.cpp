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

#include "udmlab/maps.hpp"

#include <cmath>
#include <string>

namespace udmlab {

namespace {

const Matrix& probe_inputs() {
    static const Matrix probes = [] {
        Matrix p(4, 4);
        p.col(0) = vectorize(densify(named::zero()).matrix());
        p.col(1) = vectorize(densify(named::one()).matrix());
        p.col(2) = vectorize(densify(named::plus()).matrix());
        p.col(3) = vectorize(densify(named::plus_i()).matrix());
        return p;
    }();
    return probes;
}

const Matrix& probe_inverse() {
    static const Matrix inv = probe_inputs().inverse();
    return inv;
}

void require_generator(const Matrix& k, const char* what) {
    if (k.rows() != 4 || k.cols() != 4)
        throw InputError(std::string(what) + ": generator must be 4x4");
    linalg::require_hermitian(k, kDefaultTolerances.hermitian, what);
}

void require_single_qubit(const DensityMatrix& rho, const char* what) {
    if (rho.n_qubits() != 1)
        throw InputError(std::string(what) + ": expected a single-qubit state");
}

bool same_environment(const DynamicalMap& a, const DynamicalMap& b) {
    if (a.environment().has_value() != b.environment().has_value())
        return false;
    if (!a.environment())
        return true;
    return (a.environment()->matrix() - b.environment()->matrix()).cwiseAbs().maxCoeff() <= 1e-12;
}

}  // namespace

DynamicalMap::DynamicalMap(Matrix superoperator, std::optional<DensityMatrix> environment,
                           Interval interval, Qubit which)
    : superoperator_(std::move(superoperator)),
      environment_(std::move(environment)),
      interval_(interval),
      which_(which) {
    if (superoperator_.rows() != 4 || superoperator_.cols() != 4)
        throw InputError("DynamicalMap: superoperator must be 4x4");
    linalg::require_finite(superoperator_, "DynamicalMap");
    if (environment_)
        require_single_qubit(*environment_, "DynamicalMap environment");
}

DynamicalMap DynamicalMap::identity() {
    return DynamicalMap(Matrix::Identity(4, 4));
}

DynamicalMap DynamicalMap::unitary(const Matrix& u) {
    linalg::require_unitary(u, kDefaultTolerances.unitary, "DynamicalMap::unitary");
    if (u.rows() != 2)
        throw InputError("DynamicalMap::unitary: expected a 2x2 unitary");
    return DynamicalMap(linalg::kron(u.conjugate(), u));
}

DynamicalMap DynamicalMap::from_kraus(std::span<const Matrix> operators) {
    Matrix s = Matrix::Zero(4, 4);
    for (const auto& k : operators) {
        if (k.rows() != 2 || k.cols() != 2)
            throw InputError("DynamicalMap::from_kraus: Kraus operators must be 2x2");
        s += linalg::kron(k.conjugate(), k);
    }
    return DynamicalMap(s);
}

DynamicalMap DynamicalMap::transpose() {
    Matrix s = Matrix::Zero(4, 4);
    s(0, 0) = s(1, 2) = s(2, 1) = s(3, 3) = 1.0;
    return DynamicalMap(s);
}

DynamicalMap DynamicalMap::depolarizing() {
    Matrix s = Matrix::Zero(4, 4);
    s(0, 0) = s(0, 3) = s(3, 0) = s(3, 3) = 0.5;
    return DynamicalMap(s);
}

Vector vectorize(const Matrix& rho) {
    return rho.reshaped();  // column-major storage is column stacking
}

Matrix unvectorize(const Vector& v) {
    const auto d = static_cast<Eigen::Index>(std::lround(std::sqrt(static_cast<double>(v.size()))));
    if (d * d != v.size())
        throw InputError("unvectorize: length is not a perfect square");
    return v.reshaped(d, d);
}

Matrix evolve_reduced(const Matrix& k, const Matrix& rho, const DensityMatrix& env, double t,
                      Qubit which) {
    const Matrix u = linalg::matexp_hermitian(k, t);
    const Matrix joint = which == Qubit::first ? linalg::kron(rho, env.matrix())
                                               : linalg::kron(env.matrix(), rho);
    return linalg::partial_trace(Matrix(u * joint * u.adjoint()), which);
}

DynamicalMap induced_map(const Matrix& k, const DensityMatrix& env, double t, Qubit which) {
    require_generator(k, "induced_map");
    require_single_qubit(env, "induced_map environment");
    if (!(t > 0.0) || !std::isfinite(t))
        throw InputError("induced_map: t must be positive");
    Matrix outputs(4, 4);
    for (Eigen::Index c = 0; c < 4; ++c) {
        const Matrix probe = unvectorize(probe_inputs().col(c));
        outputs.col(c) = vectorize(evolve_reduced(k, probe, env, t, which));
    }
    return DynamicalMap(outputs * probe_inverse(), env, Interval{0.0, t}, which);
}

Matrix apply_map(const DynamicalMap& m, const Matrix& rho) {
    if (rho.rows() != 2 || rho.cols() != 2)
        throw InputError("apply_map: expected a 2x2 operator");
    return unvectorize(m.superoperator() * vectorize(rho));
}

DensityMatrix apply_map(const DynamicalMap& m, const DensityMatrix& rho) {
    require_single_qubit(rho, "apply_map");
    return DensityMatrix(apply_map(m, rho.matrix()));
}

ChoiMatrix choi(const DynamicalMap& m) {
    const Matrix& s = m.superoperator();
    Matrix c(4, 4);
    for (int a = 0; a < 2; ++a)
        for (int i = 0; i < 2; ++i)
            for (int b = 0; b < 2; ++b)
                for (int j = 0; j < 2; ++j)
                    c(2 * a + i, 2 * b + j) = s(a + 2 * b, i + 2 * j);
    // Hermiticity-preserving maps give a Hermitian Choi matrix; rounding from
    // the tomography solve is removed before the eigensolve.
    const Matrix herm = (c + c.adjoint()) / 2.0;
    return {herm, linalg::hermitian_eig(herm, 1e-6).values};
}

CptpVerdict is_cptp(const DynamicalMap& m, double tol) {
    CptpVerdict v;
    v.min_choi_eigenvalue = choi(m).eigenvalues.minCoeff();
    v.cp = v.min_choi_eigenvalue >= -tol;
    Eigen::RowVector4cd id_dual(1.0, 0.0, 0.0, 1.0);
    v.tp_defect = (id_dual * m.superoperator() - id_dual).cwiseAbs().maxCoeff();
    v.tp = v.tp_defect <= tol;
    return v;
}

KrausSet kraus_decompose(const ChoiMatrix& c, const Tolerances& tol) {
    const auto eig = linalg::hermitian_eig(c.matrix, 1e-6);
    if (eig.values.minCoeff() < -tol.cp)
        throw InputError("kraus_decompose: Choi matrix has eigenvalue " +
                         std::to_string(eig.values.minCoeff()) +
                         "; the map is not completely positive and has no Kraus form");
    KrausSet out;
    for (Eigen::Index a = 0; a < eig.values.size(); ++a) {
        const double w = eig.values(a);
        if (w <= tol.kraus_cutoff)
            continue;
        Matrix k(2, 2);
        for (int r = 0; r < 2; ++r)
            for (int i = 0; i < 2; ++i)
                k(r, i) = std::sqrt(w) * eig.vectors(2 * r + i, a);
        out.operators.push_back(std::move(k));
        out.weights.push_back(w);
    }
    return out;
}

Matrix apply_kraus(const KrausSet& k, const Matrix& rho) {
    Matrix out = Matrix::Zero(rho.rows(), rho.cols());
    for (const auto& op : k.operators)
        out += op * rho * op.adjoint();
    return out;
}

double completeness_residual(const KrausSet& k) {
    Matrix sum = Matrix::Zero(2, 2);
    for (const auto& op : k.operators)
        sum += op.adjoint() * op;
    return (sum - Matrix::Identity(2, 2)).cwiseAbs().maxCoeff();
}

IntermediateMap intermediate_map(const DynamicalMap& e_short, const DynamicalMap& e_long,
                                 const Tolerances& tol) {
    if (!same_environment(e_short, e_long) || e_short.which_qubit() != e_long.which_qubit())
        throw InputError("intermediate_map: maps must share environment and subsystem");
    const Interval s = e_short.interval();
    const Interval l = e_long.interval();
    if (s.start != l.start || !(s.end < l.end) || !(s.start < s.end))
        throw InputError("intermediate_map: need intervals [t0, t1] and [t0, t*] with t0 < t1 < t*");

    const auto pinv = linalg::pseudo_inverse(e_short.superoperator(), tol.pinv_cutoff);
    DynamicalMap candidate(e_long.superoperator() * pinv.inverse, e_long.environment(),
                           Interval{s.end, l.end}, e_long.which_qubit());
    const auto verdict = is_cptp(candidate, tol.cp);
    return IntermediateMap{candidate, pinv.full_rank, verdict.cp, verdict.min_choi_eigenvalue,
                           pinv.rank};
}

WitnessReport udm_witness_subinterval(const Matrix& k, const DensityMatrix& rho_in, double t1,
                                      double t_star, const Tolerances& tol) {
    require_generator(k, "udm_witness_subinterval");
    if (rho_in.n_qubits() != 2)
        throw InputError("udm_witness_subinterval: input must be a two-qubit state");
    if (!(t1 > 0.0) || !(t1 < t_star))
        throw InputError("udm_witness_subinterval: need 0 < t1 < t*");
    if (!is_product(rho_in, tol.reconstruction))
        throw InputError(
            "udm_witness_subinterval: the joint input must be a product state "
            "rho_Q1(t0) (x) rho_Q2(t0)");

    const Matrix u1 = linalg::matexp_hermitian(k, t1);
    const Matrix u2 = linalg::matexp_hermitian(k, t_star - t1);
    const DensityMatrix sigma(u1 * rho_in.matrix() * u1.adjoint());
    const Matrix sigma_product = linalg::kron(linalg::partial_trace(sigma.matrix(), Qubit::first),
                                              linalg::partial_trace(sigma.matrix(), Qubit::second));

    WitnessReport r;
    r.t1 = t1;
    r.t_star = t_star;
    r.negativity_at_t1 = negativity(sigma);
    r.reduced_correlated =
        linalg::partial_trace(Matrix(u2 * sigma.matrix() * u2.adjoint()), Qubit::first);
    r.reduced_decorrelated =
        linalg::partial_trace(Matrix(u2 * sigma_product * u2.adjoint()), Qubit::first);
    r.trace_distance = trace_distance(r.reduced_correlated, r.reduced_decorrelated);
    r.fires = r.trace_distance > tol.witness;
    return r;
}

LocalPairMaps local_pair_maps(const Matrix& k, const DensityMatrix& rho1, const DensityMatrix& rho2,
                              double t) {
    require_single_qubit(rho1, "local_pair_maps");
    require_single_qubit(rho2, "local_pair_maps");
    return {induced_map(k, rho2, t, Qubit::first), induced_map(k, rho1, t, Qubit::second)};
}

double superoperator_distance(const DynamicalMap& a, const DynamicalMap& b) {
    return linalg::frobenius_distance(a.superoperator(), b.superoperator());
}

}  // namespace udmlab
