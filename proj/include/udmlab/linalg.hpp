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

// Dense complex linear algebra kernel for registers of up to eight qubits.
//
// Everything here is header-only and templated on the real scalar so the
// same routines serve double (the default everywhere else) and long double
// cross-checks. Matrices are plain Eigen dense types; there is no sparse
// path.

#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "udmlab/error.hpp"

namespace udmlab {

template <typename Real>
using CMatrix = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Real>
using CVector = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, 1>;
template <typename Real>
using RVector = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

using Complex = std::complex<double>;
using Matrix = CMatrix<double>;
using Vector = CVector<double>;
using RealVector = RVector<double>;

// Which factor of a two-qubit register. Qubit 1 is the left (most
// significant) tensor factor.
enum class Qubit : int { first = 1, second = 2 };

namespace linalg {

namespace detail {
template <typename Derived>
using RealOf = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
}

template <typename Derived>
bool all_finite(const Eigen::MatrixBase<Derived>& m) {
    return m.allFinite();
}

template <typename Derived>
void require_finite(const Eigen::MatrixBase<Derived>& m, const std::string& what) {
    if (m.size() == 0)
        throw InputError(what + ": empty matrix");
    if (!m.allFinite())
        throw InputError(what + ": non-finite entry");
}

// max |m - m^dagger|
template <typename Derived>
detail::RealOf<Derived> hermiticity_defect(const Eigen::MatrixBase<Derived>& m) {
    if (m.rows() != m.cols())
        return std::numeric_limits<detail::RealOf<Derived>>::infinity();
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

// max |m m^dagger - 1|
template <typename Derived>
detail::RealOf<Derived> unitarity_defect(const Eigen::MatrixBase<Derived>& m) {
    using Real = detail::RealOf<Derived>;
    if (m.rows() != m.cols())
        return std::numeric_limits<Real>::infinity();
    const CMatrix<Real> id = CMatrix<Real>::Identity(m.rows(), m.cols());
    return (m * m.adjoint() - id).cwiseAbs().maxCoeff();
}

template <typename Derived>
void require_hermitian(const Eigen::MatrixBase<Derived>& m, double tol, const std::string& what) {
    require_finite(m, what);
    if (m.rows() != m.cols())
        throw InputError(what + ": matrix is not square");
    const auto defect = hermiticity_defect(m);
    if (!(defect <= tol))
        throw InputError(what + ": matrix is not Hermitian (max |m - m^dagger| = " +
                         std::to_string(static_cast<double>(defect)) + ")");
}

template <typename Derived>
void require_unitary(const Eigen::MatrixBase<Derived>& m, double tol, const std::string& what) {
    require_finite(m, what);
    if (m.rows() != m.cols())
        throw InputError(what + ": matrix is not square");
    const auto defect = unitarity_defect(m);
    if (!(defect <= tol))
        throw InputError(what + ": matrix is not unitary (max |U U^dagger - 1| = " +
                         std::to_string(static_cast<double>(defect)) + ")");
}

template <typename DerivedA, typename DerivedB>
detail::RealOf<DerivedA> frobenius_distance(const Eigen::MatrixBase<DerivedA>& a,
                                            const Eigen::MatrixBase<DerivedB>& b) {
    return (a - b).norm();
}

/// Kronecker product: block (i, j) of the result is a(i, j) * b.
template <typename DerivedA, typename DerivedB>
CMatrix<detail::RealOf<DerivedA>> kron(const Eigen::MatrixBase<DerivedA>& a,
                                       const Eigen::MatrixBase<DerivedB>& b) {
    using Real = detail::RealOf<DerivedA>;
    CMatrix<Real> out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

/// Reduced density matrix of the kept qubits of an n-qubit operator.
///
/// `keep` lists 0-based qubit indices (0 = most significant factor); the
/// output factor order follows `keep`. Remaining qubits are summed out.
template <typename Derived>
CMatrix<detail::RealOf<Derived>> partial_trace_qubits(const Eigen::MatrixBase<Derived>& rho,
                                                      int n_qubits,
                                                      std::span<const int> keep) {
    using Real = detail::RealOf<Derived>;
    const Eigen::Index dim = Eigen::Index{1} << n_qubits;
    if (n_qubits < 1 || rho.rows() != dim || rho.cols() != dim)
        throw InputError("partial_trace: operator dimension does not match qubit count");
    std::vector<int> traced;
    std::vector<bool> kept(static_cast<size_t>(n_qubits), false);
    for (int q : keep) {
        if (q < 0 || q >= n_qubits || kept[static_cast<size_t>(q)])
            throw InputError("partial_trace: invalid or repeated kept qubit");
        kept[static_cast<size_t>(q)] = true;
    }
    for (int q = 0; q < n_qubits; ++q)
        if (!kept[static_cast<size_t>(q)])
            traced.push_back(q);

    const auto compose = [&](Eigen::Index kept_bits, Eigen::Index traced_bits) {
        Eigen::Index idx = 0;
        const auto nk = static_cast<int>(keep.size());
        const auto nt = static_cast<int>(traced.size());
        for (int s = 0; s < nk; ++s)
            if ((kept_bits >> (nk - 1 - s)) & 1)
                idx |= Eigen::Index{1} << (n_qubits - 1 - keep[static_cast<size_t>(s)]);
        for (int s = 0; s < nt; ++s)
            if ((traced_bits >> (nt - 1 - s)) & 1)
                idx |= Eigen::Index{1} << (n_qubits - 1 - traced[static_cast<size_t>(s)]);
        return idx;
    };

    const Eigen::Index kdim = Eigen::Index{1} << keep.size();
    const Eigen::Index tdim = Eigen::Index{1} << traced.size();
    CMatrix<Real> out = CMatrix<Real>::Zero(kdim, kdim);
    for (Eigen::Index a = 0; a < kdim; ++a)
        for (Eigen::Index b = 0; b < kdim; ++b)
            for (Eigen::Index t = 0; t < tdim; ++t)
                out(a, b) += rho(compose(a, t), compose(b, t));
    return out;
}

/// Reduced density matrix of one qubit of a two-qubit operator.
template <typename Derived>
CMatrix<detail::RealOf<Derived>> partial_trace(const Eigen::MatrixBase<Derived>& rho, Qubit keep) {
    if (rho.rows() != 4 || rho.cols() != 4)
        throw InputError("partial_trace: expected a 4x4 operator");
    const int q = keep == Qubit::first ? 0 : 1;
    return partial_trace_qubits(rho, 2, std::span<const int>(&q, 1));
}

template <typename Real>
struct HermitianEig {
    RVector<Real> values;   // descending
    CMatrix<Real> vectors;  // orthonormal columns
};

/// Eigendecomposition of a Hermitian matrix, eigenvalues descending.
///
/// Each eigenvector is rephased so that its first component with modulus
/// above 1e-12 is real and positive, which makes the output reproducible
/// across runs.
template <typename Derived>
HermitianEig<detail::RealOf<Derived>> hermitian_eig(const Eigen::MatrixBase<Derived>& m,
                                                    double tol = 1e-10) {
    using Real = detail::RealOf<Derived>;
    require_hermitian(m, tol, "hermitian_eig");
    const CMatrix<Real> sym = (m + m.adjoint()) / Real(2);
    Eigen::SelfAdjointEigenSolver<CMatrix<Real>> solver(sym);
    if (solver.info() != Eigen::Success)
        throw InvariantError("hermitian_eig: eigensolver did not converge");

    const Eigen::Index n = sym.rows();
    HermitianEig<Real> out{RVector<Real>(n), CMatrix<Real>(n, n)};
    for (Eigen::Index c = 0; c < n; ++c) {
        const Eigen::Index src = n - 1 - c;
        out.values(c) = solver.eigenvalues()(src);
        CVector<Real> v = solver.eigenvectors().col(src);
        for (Eigen::Index r = 0; r < n; ++r) {
            if (std::abs(v(r)) > Real(1e-12)) {
                v *= std::conj(v(r)) / std::abs(v(r));
                v(r) = std::complex<Real>(std::abs(v(r)), Real(0));
                break;
            }
        }
        out.vectors.col(c) = v;
    }
    return out;
}

/// exp(-i k t) for Hermitian k, by spectral decomposition.
template <typename Derived>
CMatrix<detail::RealOf<Derived>> matexp_hermitian(const Eigen::MatrixBase<Derived>& k,
                                                  detail::RealOf<Derived> t,
                                                  double tol = 1e-10) {
    using Real = detail::RealOf<Derived>;
    const auto eig = hermitian_eig(k, tol);
    CVector<Real> phases(eig.values.size());
    for (Eigen::Index i = 0; i < phases.size(); ++i)
        phases(i) = std::polar(Real(1), -eig.values(i) * t);
    return eig.vectors * phases.asDiagonal() * eig.vectors.adjoint();
}

template <typename Real>
struct Svd {
    RVector<Real> values;  // descending, nonnegative
    CMatrix<Real> u;
    CMatrix<Real> v;
};

/// m = u * diag(values) * v^dagger
template <typename Derived>
Svd<detail::RealOf<Derived>> svd(const Eigen::MatrixBase<Derived>& m) {
    using Real = detail::RealOf<Derived>;
    require_finite(m, "svd");
    Eigen::JacobiSVD<CMatrix<Real>> solver(CMatrix<Real>(m), Eigen::ComputeFullU | Eigen::ComputeFullV);
    return {solver.singularValues(), solver.matrixU(), solver.matrixV()};
}

template <typename Real>
struct PseudoInverse {
    CMatrix<Real> inverse;
    Eigen::Index rank = 0;
    bool full_rank = false;
};

/// Moore-Penrose inverse. Singular values at or below cutoff * sigma_max are
/// treated as zero; the surviving count is reported as the numerical rank.
template <typename Derived>
PseudoInverse<detail::RealOf<Derived>> pseudo_inverse(const Eigen::MatrixBase<Derived>& m,
                                                      double cutoff) {
    using Real = detail::RealOf<Derived>;
    const auto dec = svd(m);
    const Real smax = dec.values.size() > 0 ? dec.values(0) : Real(0);
    RVector<Real> inv = RVector<Real>::Zero(dec.values.size());
    Eigen::Index rank = 0;
    for (Eigen::Index i = 0; i < dec.values.size(); ++i) {
        if (smax > Real(0) && dec.values(i) > Real(cutoff) * smax) {
            inv(i) = Real(1) / dec.values(i);
            ++rank;
        }
    }
    const Eigen::Index k = inv.size();
    CMatrix<Real> pinv = dec.v.leftCols(k) * inv.asDiagonal() * dec.u.leftCols(k).adjoint();
    return {pinv, rank, rank == std::min(m.rows(), m.cols())};
}

}  // namespace linalg
}  // namespace udmlab
