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
#include <doctest.h>

#include <numbers>

#include "oracles.hpp"
#include "udmlab/gates.hpp"
#include "udmlab/linalg.hpp"

using namespace udmlab;
namespace la = udmlab::linalg;

namespace {
constexpr double pi = std::numbers::pi;

double maxdiff(const Matrix& a, const Matrix& b) {
    return (a - b).cwiseAbs().maxCoeff();
}
}  // namespace

TEST_CASE("kron: identity, basis vectors, local phase vs controlled phase") {
    CHECK(maxdiff(la::kron(Matrix::Identity(2, 2), Matrix::Identity(2, 2)), Matrix::Identity(4, 4)) == 0.0);

    const Vector ket0{{1.0, 0.0}}, ket1{{0.0, 1.0}};
    const Matrix v = la::kron(ket0, ket1);
    REQUIRE(v.rows() == 4);
    REQUIRE(v.cols() == 1);
    CHECK(v(1, 0) == Complex(1.0));
    CHECK(v.norm() == 1.0);

    const double phi = 0.7;
    Matrix ph = Matrix::Identity(2, 2);
    ph(1, 1) = std::polar(1.0, phi);
    const Matrix local = la::kron(Matrix::Identity(2, 2), ph);
    Matrix expected = Matrix::Identity(4, 4);
    expected(1, 1) = expected(3, 3) = std::polar(1.0, phi);
    CHECK(maxdiff(local, expected) == 0.0);
    CHECK(maxdiff(local, c_phase(phi).unitary()) > 0.1);
}

TEST_CASE("kron: associativity and mixed product property") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const Matrix a = oracle::random_complex(rng, 2, 2), b = oracle::random_complex(rng, 2, 2);
        const Matrix c = oracle::random_complex(rng, 2, 2), d = oracle::random_complex(rng, 2, 2);
        CHECK(maxdiff(la::kron(a, b) * la::kron(c, d), la::kron(Matrix(a * c), Matrix(b * d))) < 1e-12);
    }
    // Entrywise products of Gaussian integers are exact, so the two
    // groupings agree bit for bit.
    std::uniform_int_distribution<int> small(-5, 5);
    const auto gaussian_int = [&] {
        Matrix m(2, 2);
        for (int i = 0; i < 4; ++i)
            m(i) = Complex(small(rng), small(rng));
        return m;
    };
    for (int trial = 0; trial < 20; ++trial) {
        const Matrix a = gaussian_int(), b = gaussian_int(), c = gaussian_int();
        CHECK(maxdiff(la::kron(la::kron(a, b), c), la::kron(a, la::kron(b, c))) == 0.0);
    }
}

TEST_CASE("partial_trace: product states, Bell state, trace preservation") {
    Matrix p00 = Matrix::Zero(4, 4);
    p00(0, 0) = 1.0;
    Matrix p0 = Matrix::Zero(2, 2);
    p0(0, 0) = 1.0;
    CHECK(maxdiff(la::partial_trace(p00, Qubit::first), p0) == 0.0);

    std::mt19937_64 rng(3);
    const Matrix ra = oracle::random_density(rng, 2), rb = oracle::random_density(rng, 2);
    CHECK(maxdiff(la::partial_trace(la::kron(ra, rb), Qubit::second), rb) < 1e-14);
    CHECK(maxdiff(la::partial_trace(la::kron(ra, rb), Qubit::first), ra) < 1e-14);

    Vector bell = Vector::Zero(4);
    bell(0) = bell(3) = 1.0 / std::sqrt(2.0);
    const Matrix rho = bell * bell.adjoint();
    CHECK(maxdiff(la::partial_trace(rho, Qubit::first), Matrix::Identity(2, 2) / 2.0) < 1e-15);

    for (int trial = 0; trial < 20; ++trial) {
        const Matrix r = oracle::random_density(rng, 4);
        const Matrix r1 = la::partial_trace(r, Qubit::first);
        CHECK(std::abs(r1.trace() - r.trace()) < 1e-12);
        CHECK(maxdiff(r1, oracle::trace_out_second(r)) < 1e-14);
        CHECK(maxdiff(la::partial_trace(r, Qubit::second), oracle::trace_out_first(r)) < 1e-14);
    }
    CHECK_THROWS_AS(la::partial_trace(Matrix::Identity(2, 2), Qubit::first), InputError);
}

TEST_CASE("partial_trace_qubits: kept order and multi-qubit registers") {
    std::mt19937_64 rng(5);
    const Matrix a = oracle::random_density(rng, 2), b = oracle::random_density(rng, 2),
                 c = oracle::random_density(rng, 2);
    const Matrix abc = la::kron(la::kron(a, b), c);
    const std::array<int, 2> keep20{2, 0};
    CHECK(maxdiff(la::partial_trace_qubits(abc, 3, keep20), la::kron(c, a)) < 1e-14);
    const std::array<int, 1> keep1{1};
    CHECK(maxdiff(la::partial_trace_qubits(abc, 3, keep1), b) < 1e-14);
    const std::array<int, 2> bad{1, 1};
    CHECK_THROWS_AS(la::partial_trace_qubits(abc, 3, bad), InputError);
}

TEST_CASE("hermitian_eig: golden spectra, ordering, phase convention") {
    auto e = la::hermitian_eig(Matrix(Matrix::Identity(2, 2)));
    CHECK(e.values(0) == doctest::Approx(1.0));
    CHECK(e.values(1) == doctest::Approx(1.0));

    e = la::hermitian_eig(paulis::x());
    CHECK(e.values(0) == doctest::Approx(1.0));
    CHECK(e.values(1) == doctest::Approx(-1.0));
    const double s = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(e.vectors(0, 0) - s) < 1e-12);
    CHECK(std::abs(e.vectors(1, 0) - s) < 1e-12);
    CHECK(std::abs(e.vectors(0, 1) - s) < 1e-12);
    CHECK(std::abs(e.vectors(1, 1) + s) < 1e-12);

    Matrix d = Matrix::Zero(4, 4);
    d(0, 0) = 3.0;
    d(1, 1) = 1.0;
    e = la::hermitian_eig(d);
    CHECK(e.values(0) == doctest::Approx(3.0));
    CHECK(e.values(1) == doctest::Approx(1.0));
    CHECK(std::abs(e.values(2)) < 1e-15);
    CHECK(std::abs(e.values(3)) < 1e-15);

    Matrix nonherm = paulis::x();
    nonherm(0, 1) = 2.0;
    CHECK_THROWS_AS(la::hermitian_eig(nonherm), InputError);
}

TEST_CASE("hermitian_eig: reconstruction and orthonormality on random inputs") {
    std::mt19937_64 rng(17);
    for (int dim : {2, 4, 8, 16}) {
        const Matrix m = oracle::random_hermitian(rng, dim);
        const auto e = la::hermitian_eig(m);
        const Matrix rec = e.vectors * e.values.cast<Complex>().asDiagonal() * e.vectors.adjoint();
        CHECK((rec - m).norm() < 1e-9);
        CHECK(maxdiff(e.vectors.adjoint() * e.vectors, Matrix::Identity(dim, dim)) < 1e-9);
        for (int i = 1; i < dim; ++i)
            CHECK(e.values(i - 1) >= e.values(i));
        for (int c = 0; c < dim; ++c) {
            // first significant entry is real positive
            for (int r = 0; r < dim; ++r) {
                if (std::abs(e.vectors(r, c)) > 1e-12) {
                    CHECK(e.vectors(r, c).real() > 0.0);
                    CHECK(e.vectors(r, c).imag() == 0.0);
                    break;
                }
            }
        }
    }
}

TEST_CASE("matexp_hermitian: golden values") {
    std::mt19937_64 rng(23);
    const Matrix k = oracle::random_hermitian(rng, 4);
    CHECK(maxdiff(la::matexp_hermitian(k, 0.0), Matrix::Identity(4, 4)) < 1e-14);

    const Matrix ux = la::matexp_hermitian(paulis::x(), pi / 2);
    CHECK(maxdiff(ux, Complex(0, -1) * paulis::x()) < 1e-15);
    CHECK(equal_up_to_phase(ux, paulis::x(), 1e-10));

    Matrix kd = Matrix::Zero(4, 4);
    kd(3, 3) = pi;
    Matrix cz = Matrix::Identity(4, 4);
    cz(3, 3) = -1.0;
    CHECK(maxdiff(la::matexp_hermitian(kd, 1.0), cz) < 1e-15);

    Matrix nonherm = Matrix::Zero(2, 2);
    nonherm(0, 1) = 1.0;
    CHECK_THROWS_AS(la::matexp_hermitian(nonherm, 1.0), InputError);
}

TEST_CASE("matexp_hermitian: unitarity, semigroup, series cross-check") {
    std::mt19937_64 rng(29);
    std::uniform_real_distribution<double> time(-3.0, 3.0);
    for (int trial = 0; trial < 25; ++trial) {
        const Matrix k = oracle::random_hermitian(rng, 4);
        const double t = time(rng), s = time(rng);
        const Matrix ut = la::matexp_hermitian(k, t);
        CHECK(la::unitarity_defect(ut) < 1e-10);
        CHECK(maxdiff(ut * la::matexp_hermitian(k, s), la::matexp_hermitian(k, t + s)) < 1e-9);
        CHECK(maxdiff(ut, oracle::series_exp(k, t)) < 1e-10);
    }
}

TEST_CASE("matexp_hermitian: long double instantiation agrees") {
    std::mt19937_64 rng(31);
    const Matrix k = oracle::random_hermitian(rng, 4);
    const CMatrix<long double> kl = k.cast<std::complex<long double>>();
    const CMatrix<long double> ul = la::matexp_hermitian(kl, 0.8L);
    CHECK(maxdiff(ul.cast<Complex>(), la::matexp_hermitian(k, 0.8)) < 1e-13);
}

TEST_CASE("svd: golden singular values and reconstruction") {
    auto d = la::svd(Matrix(Matrix::Identity(2, 2)));
    CHECK(d.values(0) == doctest::Approx(1.0));
    CHECK(d.values(1) == doctest::Approx(1.0));

    Matrix outer = Matrix::Zero(2, 2);
    outer(0, 1) = 1.0;
    d = la::svd(outer);
    CHECK(d.values(0) == doctest::Approx(1.0));
    CHECK(std::abs(d.values(1)) < 1e-15);

    Matrix bell = Matrix::Zero(2, 2);
    bell(0, 0) = bell(1, 1) = 1.0 / std::sqrt(2.0);
    d = la::svd(bell);
    CHECK(d.values(0) == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK(d.values(1) == doctest::Approx(1.0 / std::sqrt(2.0)));

    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 10; ++trial) {
        const Matrix m = oracle::random_complex(rng, 4, 3);
        const auto s = la::svd(m);
        Matrix sigma = Matrix::Zero(4, 3);
        for (int i = 0; i < 3; ++i)
            sigma(i, i) = s.values(i);
        CHECK((s.u * sigma * s.v.adjoint() - m).norm() < 1e-9);
        CHECK(s.values(0) >= s.values(1));
        CHECK(s.values(1) >= s.values(2));
    }
}

TEST_CASE("pseudo_inverse: identity, rank-deficient diagonal, unitary") {
    auto p = la::pseudo_inverse(Matrix(Matrix::Identity(4, 4)), 1e-12);
    CHECK(maxdiff(p.inverse, Matrix::Identity(4, 4)) < 1e-15);
    CHECK(p.rank == 4);
    CHECK(p.full_rank);

    Matrix d = Matrix::Zero(2, 2);
    d(0, 0) = 2.0;
    p = la::pseudo_inverse(d, 1e-12);
    Matrix expected = Matrix::Zero(2, 2);
    expected(0, 0) = 0.5;
    CHECK(maxdiff(p.inverse, expected) < 1e-15);
    CHECK(p.rank == 1);
    CHECK_FALSE(p.full_rank);

    std::mt19937_64 rng(41);
    const Matrix u = oracle::random_unitary(rng, 4);
    p = la::pseudo_inverse(u, 1e-12);
    CHECK(maxdiff(p.inverse, u.adjoint()) < 1e-12);
    CHECK(maxdiff(u * p.inverse, Matrix::Identity(4, 4)) < 1e-12);
}
