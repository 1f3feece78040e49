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

#include <cstdio>
#include <numbers>
#include <sstream>

#include "oracles.hpp"
#include "udmlab/dynamics.hpp"

using namespace udmlab;

namespace {

constexpr double pi = std::numbers::pi;

Matrix cz_generator() {
    Matrix k = Matrix::Zero(4, 4);
    k(3, 3) = pi;
    return k;
}

double maxdiff(const Matrix& a, const Matrix& b) {
    return (a - b).cwiseAbs().maxCoeff();
}

DensityMatrix plus_plus() {
    return densify(tensor(named::plus(), named::plus()));
}

}  // namespace

TEST_CASE("TimeGrid: points, epsilon and validation") {
    const TimeGrid g(0.0, 1.0, 4);
    CHECK(g.epsilon() == 0.25);
    CHECK(g.point(0) == 0.0);
    CHECK(g.point(2) == 0.5);
    CHECK(g.point(4) == 1.0);
    const TimeGrid odd(0.1, 0.7, 3);
    CHECK(odd.point(3) == 0.7);
    for (int m = 0; m < 3; ++m)
        CHECK(odd.point(m) < odd.point(m + 1));
    CHECK_THROWS_AS(TimeGrid(1.0, 1.0, 4), InputError);
    CHECK_THROWS_AS(TimeGrid(0.0, 1.0, 0), InputError);
    CHECK_THROWS_AS(g.point(5), InputError);
}

TEST_CASE("evolve_trajectory: zero generator keeps the input") {
    std::mt19937_64 rng(3);
    const DensityMatrix rho(oracle::random_density(rng, 4));
    const auto traj = evolve_trajectory(Matrix::Zero(4, 4), rho, TimeGrid(0.0, 2.0, 7));
    REQUIRE(traj.states().size() == 8);
    for (const auto& s : traj.states())
        CHECK(maxdiff(s.matrix(), rho.matrix()) < 1e-14);
}

TEST_CASE("evolve_trajectory: C_pi on |++>") {
    const auto traj = evolve_trajectory(cz_generator(), plus_plus(), TimeGrid(0.0, 1.0, 4));
    const Vector end{{0.5, 0.5, 0.5, -0.5}};
    CHECK(maxdiff(traj.back().matrix(), end * end.adjoint()) < 1e-12);
    for (int m = 0; m <= 4; ++m) {
        const double t = traj.grid().point(m);
        const Vector psi{{0.5, 0.5, 0.5, 0.5 * std::polar(1.0, -pi * t)}};
        CHECK(maxdiff(traj.states()[m].matrix(), psi * psi.adjoint()) < 1e-12);
    }
}

TEST_CASE("evolve_trajectory: endpoint equals single-shot gate application") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 25; ++trial) {
        const Matrix k = oracle::random_hermitian(rng, 4);
        const TimeGrid grid(0.2, 0.2 + 0.3 * (trial + 1), 10);
        const DensityMatrix rho = densify(tensor(PureState(oracle::random_state(rng, 2)),
                                                 PureState(oracle::random_state(rng, 2))));
        const auto traj = evolve_trajectory(k, rho, grid);
        const Gate g = gate_from_generator(k, grid.t_end() - grid.t_start());
        CHECK(maxdiff(traj.back().matrix(), apply(g, rho).matrix()) < 1e-10);
        const Matrix u = oracle::series_exp(k, grid.t_end() - grid.t_start());
        CHECK(maxdiff(traj.back().matrix(), u * rho.matrix() * u.adjoint()) < 1e-10);
    }
}

TEST_CASE("evolve_trajectory: refinement leaves shared points unchanged") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        const Matrix k = oracle::random_hermitian(rng, 4, 2.0);
        const DensityMatrix rho(oracle::random_density(rng, 4));
        const TimeGrid coarse(0.0, 1.3, 10), fine(0.0, 1.3, 20);
        const auto a = evolve_trajectory(k, rho, coarse);
        const auto b = evolve_trajectory(k, rho, fine);
        for (int m = 0; m <= 10; ++m) {
            CHECK(coarse.point(m) == fine.point(2 * m));
            CHECK(maxdiff(a.states()[m].matrix(), b.states()[2 * m].matrix()) < 1e-12);
        }
    }
}

TEST_CASE("evolve_trajectory: purity is conserved") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 20; ++trial) {
        const Matrix k = oracle::random_hermitian(rng, 4, 3.0);
        const DensityMatrix rho(oracle::random_density(rng, 4));
        const auto traj = evolve_trajectory(k, rho, TimeGrid(0.0, 5.0, 50));
        for (const auto& s : traj.states())
            CHECK(std::abs(s.purity() - rho.purity()) < 1e-9);
    }
}

TEST_CASE("entanglement_profile: local generator stays at zero") {
    const Matrix k = linalg::kron(paulis::z(), paulis::identity());
    const auto traj = evolve_trajectory(k, plus_plus(), TimeGrid(0.0, 3.0, 30));
    for (const auto& p : entanglement_profile(traj)) {
        CHECK(p.negativity < 1e-12);
        REQUIRE(p.tau.has_value());
        CHECK(*p.tau < 1e-12);
    }
}

TEST_CASE("entanglement_profile: C_pi on |++> follows |e^{-i pi t} - 1|/4") {
    const auto traj = evolve_trajectory(cz_generator(), plus_plus(), TimeGrid(0.0, 1.0, 100));
    const auto profile = entanglement_profile(traj);
    for (const auto& p : profile) {
        REQUIRE(p.tau.has_value());
        const double expected = std::abs(std::polar(1.0, -pi * p.t) - 1.0) / 4.0;
        CHECK(std::abs(*p.tau - expected) < 1e-9);
        // for pure two-qubit states the negativity equals tau
        CHECK(std::abs(p.negativity - expected) < 1e-9);
    }
    CHECK(*profile[50].tau == doctest::Approx(std::sqrt(2.0) / 4.0).epsilon(1e-12));
    CHECK(*profile[100].tau == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("entanglement_profile: control in superposition, target |1>") {
    const auto in = densify(tensor(named::plus(), named::one()));
    const auto traj = evolve_trajectory(cz_generator(), in, TimeGrid(0.0, 1.0, 40));
    for (const auto& p : entanglement_profile(traj)) {
        CHECK(p.negativity < 1e-12);
        CHECK(*p.tau < 1e-12);
    }
}

TEST_CASE("entanglement_profile: tau is omitted for mixed joint states") {
    const DensityMatrix mixed(Matrix::Identity(4, 4) / 4.0);
    const auto traj = evolve_trajectory(cz_generator(), mixed, TimeGrid(0.0, 1.0, 3));
    for (const auto& p : entanglement_profile(traj)) {
        CHECK_FALSE(p.tau.has_value());
        CHECK(p.purity == doctest::Approx(0.25));
    }
}

TEST_CASE("find_entangled_instant") {
    const auto constant = evolve_trajectory(Matrix::Zero(4, 4), plus_plus(), TimeGrid(0.0, 1.0, 10));
    CHECK_FALSE(find_entangled_instant(constant, 1e-6).has_value());

    const auto cz = evolve_trajectory(cz_generator(), plus_plus(), TimeGrid(0.0, 1.0, 100));
    const auto hit = find_entangled_instant(cz, 1e-6);
    REQUIRE(hit.has_value());
    CHECK(hit->t == 0.01);
    CHECK(hit->negativity > 1e-6);
    // the joint state at t1 differs from the product of its marginals
    const auto& rho = cz.states()[1];
    const Matrix marginals = linalg::kron(reduced(rho, Qubit::first).matrix(), reduced(rho, Qubit::second).matrix());
    CHECK((rho.matrix() - marginals).norm() > 1e-6);

    const auto basis = evolve_trajectory(cz_generator(), densify(PureState::basis("01")), TimeGrid(0.0, 1.0, 100));
    CHECK_FALSE(find_entangled_instant(basis, 1e-6).has_value());
}

TEST_CASE("find_entangling_product_input: C_phi family") {
    for (double phi : {pi / 2, pi / 4, pi}) {
        const Gate g = c_phase(phi);
        const auto found = find_entangling_product_input(g.generator(), TimeGrid(0.0, g.duration(), 100), 1e-6);
        REQUIRE(found.has_value());
        CHECK(found->instant.negativity > 1e-6);
    }
    const Matrix local = linalg::kron(paulis::z(), paulis::identity()) + linalg::kron(paulis::identity(), paulis::x());
    CHECK_FALSE(find_entangling_product_input(local, TimeGrid(0.0, 1.0, 20), 1e-6).has_value());
}

TEST_CASE("purify and write_profile_csv") {
    const PureState psi = tensor(named::plus(), named::minus_i());
    const PureState back = purify(densify(psi));
    CHECK(std::abs(std::abs(back.amplitudes().dot(psi.amplitudes())) - 1.0) < 1e-12);

    const auto traj = evolve_trajectory(cz_generator(), plus_plus(), TimeGrid(0.0, 1.0, 2));
    std::ostringstream pure_csv;
    write_profile_csv(pure_csv, entanglement_profile(traj));
    std::string line;
    std::istringstream lines(pure_csv.str());
    std::getline(lines, line);
    CHECK(line == "t,negativity,tau,purity");
    std::getline(lines, line);
    double t = -1, neg = -1, tau = -1, purity = -1;
    REQUIRE(std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf", &t, &neg, &tau, &purity) == 4);
    CHECK(t == 0.0);
    CHECK(neg < 1e-12);
    CHECK(tau < 1e-12);
    CHECK(purity == doctest::Approx(1.0));
    int rows = 1;
    while (std::getline(lines, line))
        ++rows;
    CHECK(rows == 3);

    const auto mixed = evolve_trajectory(cz_generator(), DensityMatrix(Matrix::Identity(4, 4) / 4.0),
                                         TimeGrid(0.0, 1.0, 1));
    std::ostringstream mixed_csv;
    write_profile_csv(mixed_csv, entanglement_profile(mixed));
    CHECK(mixed_csv.str().find("0,0,,0.25\n") != std::string::npos);
}
