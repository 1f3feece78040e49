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

#include <iosfwd>
#include <optional>
#include <vector>

#include "udmlab/gates.hpp"

namespace udmlab {

/// Uniform partition of [t_start, t_end] into `steps` sub-intervals of width
/// epsilon. Point M is t_end exactly.
class TimeGrid {
public:
    TimeGrid(double t_start, double t_end, int steps);

    double t_start() const { return t_start_; }
    double t_end() const { return t_end_; }
    int steps() const { return steps_; }
    double epsilon() const { return (t_end_ - t_start_) / steps_; }
    double point(int m) const;

private:
    double t_start_;
    double t_end_;
    int steps_;
};

/// Joint two-qubit states sampled on a grid. states()[m] is the state at
/// grid.point(m), the first being the input at t_start.
class Trajectory {
public:
    Trajectory(TimeGrid grid, std::vector<DensityMatrix> states, Matrix generator);

    const TimeGrid& grid() const { return grid_; }
    const std::vector<DensityMatrix>& states() const { return states_; }
    const Matrix& generator() const { return generator_; }
    const DensityMatrix& back() const { return states_.back(); }

private:
    TimeGrid grid_;
    std::vector<DensityMatrix> states_;
    Matrix generator_;
};

/// Propagates rho_in under exp(-i k (t - t_start)). Each sample is computed
/// from one spectral decomposition of k, never by chaining steps.
Trajectory evolve_trajectory(const Matrix& k, const DensityMatrix& rho_in, const TimeGrid& grid);

struct ProfilePoint {
    double t = 0.0;
    double negativity = 0.0;
    std::optional<double> tau;  // only for pure joint states
    double purity = 0.0;
};

std::vector<ProfilePoint> entanglement_profile(const Trajectory& traj,
                                               double purity_tol = kDefaultTolerances.reconstruction);

struct EntangledInstant {
    double t = 0.0;
    double negativity = 0.0;
};

/// Earliest grid point whose joint state has negativity above tol.
std::optional<EntangledInstant> find_entangled_instant(const Trajectory& traj, double tol);

/// Dominant eigenvector of a (numerically) pure density matrix.
PureState purify(const DensityMatrix& rho);

/// CSV with header "t,negativity,tau,purity"; tau is empty for mixed states.
void write_profile_csv(std::ostream& out, const std::vector<ProfilePoint>& profile);

struct EntanglingInput {
    PureState first;
    PureState second;
    EntangledInstant instant;
};

/// Searches the 36 stabilizer product inputs for one that becomes entangled
/// somewhere on the grid. Returns the first hit in stabilizer order.
std::optional<EntanglingInput> find_entangling_product_input(const Matrix& k, const TimeGrid& grid,
                                                             double tol);

}  // namespace udmlab
