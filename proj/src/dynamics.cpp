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

#include "udmlab/dynamics.hpp"

#include <cmath>
#include <ostream>

#include "udmlab/format.hpp"

namespace udmlab {

TimeGrid::TimeGrid(double t_start, double t_end, int steps)
    : t_start_(t_start), t_end_(t_end), steps_(steps) {
    if (!std::isfinite(t_start) || !std::isfinite(t_end) || !(t_end > t_start))
        throw InputError("TimeGrid: need finite t_end > t_start");
    if (steps < 1)
        throw InputError("TimeGrid: steps must be a positive integer");
}

double TimeGrid::point(int m) const {
    if (m < 0 || m > steps_)
        throw InputError("TimeGrid: point index out of range");
    if (m == steps_)
        return t_end_;
    // (span * m) / M keeps point(2m) on a 2M grid bit-identical to point(m).
    return t_start_ + ((t_end_ - t_start_) * m) / steps_;
}

Trajectory::Trajectory(TimeGrid grid, std::vector<DensityMatrix> states, Matrix generator)
    : grid_(grid), states_(std::move(states)), generator_(std::move(generator)) {
    if (states_.size() != static_cast<size_t>(grid_.steps()) + 1)
        throw InvariantError("Trajectory: need one state per grid point");
    for (const auto& s : states_)
        if (s.n_qubits() != 2)
            throw InvariantError("Trajectory: joint states must be two-qubit");
}

Trajectory evolve_trajectory(const Matrix& k, const DensityMatrix& rho_in, const TimeGrid& grid) {
    if (k.rows() != 4 || k.cols() != 4)
        throw InputError("evolve_trajectory: generator must be 4x4");
    if (rho_in.n_qubits() != 2)
        throw InputError("evolve_trajectory: input must be a two-qubit state");
    const auto eig = linalg::hermitian_eig(k, kDefaultTolerances.hermitian);
    // Work in the eigenbasis of k: rho_eb(t)_{ij} = rho_eb_{ij} e^{-i (l_i - l_j) t}.
    const Matrix rho_eb = eig.vectors.adjoint() * rho_in.matrix() * eig.vectors;

    std::vector<DensityMatrix> states;
    states.reserve(static_cast<size_t>(grid.steps()) + 1);
    for (int m = 0; m <= grid.steps(); ++m) {
        const double dt = grid.point(m) - grid.t_start();
        Vector phases(4);
        for (int i = 0; i < 4; ++i)
            phases(i) = std::polar(1.0, -eig.values(i) * dt);
        const Matrix evolved_eb = phases.asDiagonal() * rho_eb * phases.conjugate().asDiagonal();
        states.emplace_back(eig.vectors * evolved_eb * eig.vectors.adjoint());
    }
    return Trajectory(grid, std::move(states), k);
}

PureState purify(const DensityMatrix& rho) {
    const auto eig = linalg::hermitian_eig(rho.matrix());
    return PureState::normalized(eig.vectors.col(0));
}

std::vector<ProfilePoint> entanglement_profile(const Trajectory& traj, double purity_tol) {
    std::vector<ProfilePoint> out;
    out.reserve(traj.states().size());
    for (size_t m = 0; m < traj.states().size(); ++m) {
        const auto& rho = traj.states()[m];
        ProfilePoint p;
        p.t = traj.grid().point(static_cast<int>(m));
        p.negativity = negativity(rho);
        p.purity = rho.purity();
        if (p.purity >= 1.0 - purity_tol)
            p.tau = pure_entanglement(purify(rho));
        out.push_back(p);
    }
    return out;
}

std::optional<EntangledInstant> find_entangled_instant(const Trajectory& traj, double tol) {
    for (size_t m = 0; m < traj.states().size(); ++m) {
        const double neg = negativity(traj.states()[m]);
        if (neg > tol)
            return EntangledInstant{traj.grid().point(static_cast<int>(m)), neg};
    }
    return std::nullopt;
}

void write_profile_csv(std::ostream& out, const std::vector<ProfilePoint>& profile) {
    out << "t,negativity,tau,purity\n";
    for (const auto& p : profile) {
        out << format_number(p.t) << ',' << format_number(p.negativity) << ',';
        if (p.tau)
            out << format_number(*p.tau);
        out << ',' << format_number(p.purity) << '\n';
    }
}

std::optional<EntanglingInput> find_entangling_product_input(const Matrix& k, const TimeGrid& grid,
                                                             double tol) {
    for (const auto& a : stabilizer_states()) {
        for (const auto& b : stabilizer_states()) {
            const auto traj = evolve_trajectory(k, densify(tensor(a, b)), grid);
            if (auto hit = find_entangled_instant(traj, tol))
                return EntanglingInput{a, b, *hit};
        }
    }
    return std::nullopt;
}

}  // namespace udmlab
