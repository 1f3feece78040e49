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

// Reduced dynamical maps of one qubit of a two-qubit register.
//
// Vectorization is column-stacking throughout: vec(rho)[i + 2 j] = rho(i, j),
// so the superoperator of rho -> A rho B^dagger is conj(B) (x) A.

#pragma once

#include <optional>
#include <span>
#include <vector>

#include "udmlab/states.hpp"

namespace udmlab {

struct Interval {
    double start = 0.0;
    double end = 0.0;
};

class DynamicalMap {
public:
    explicit DynamicalMap(Matrix superoperator, std::optional<DensityMatrix> environment = std::nullopt,
                          Interval interval = {}, Qubit which = Qubit::first);

    static DynamicalMap identity();
    /// rho -> u rho u^dagger
    static DynamicalMap unitary(const Matrix& u);
    /// rho -> sum_a K_a rho K_a^dagger
    static DynamicalMap from_kraus(std::span<const Matrix> operators);
    /// rho -> rho^T; positive but not completely positive.
    static DynamicalMap transpose();
    /// rho -> trace(rho) 1/2
    static DynamicalMap depolarizing();

    const Matrix& superoperator() const { return superoperator_; }
    const std::optional<DensityMatrix>& environment() const { return environment_; }
    Interval interval() const { return interval_; }
    Qubit which_qubit() const { return which_; }

private:
    Matrix superoperator_;
    std::optional<DensityMatrix> environment_;
    Interval interval_;
    Qubit which_;
};

Vector vectorize(const Matrix& rho);
Matrix unvectorize(const Vector& v);

/// Tr_env[U(t) (rho (x) env) U(t)^dagger] for which = first; the factor order
/// is swapped for which = second. Reference path used by the tomography.
Matrix evolve_reduced(const Matrix& k, const Matrix& rho, const DensityMatrix& env, double t,
                      Qubit which);

/// Map induced on one qubit over [0, t] by the product initial condition
/// rho (x) env, reconstructed from the probe set |0>, |1>, |+>, |+i>.
DynamicalMap induced_map(const Matrix& k, const DensityMatrix& env, double t, Qubit which);

/// Superoperator action without output validation.
Matrix apply_map(const DynamicalMap& m, const Matrix& rho);

/// Validated action; throws InvariantError when the output is not a state,
/// which happens for maps that are not completely positive.
DensityMatrix apply_map(const DynamicalMap& m, const DensityMatrix& rho);

struct ChoiMatrix {
    Matrix matrix;            // sum_ij E(|i><j|) (x) |i><j|
    RealVector eigenvalues;   // descending
};

ChoiMatrix choi(const DynamicalMap& m);

struct CptpVerdict {
    bool cp = false;
    bool tp = false;
    double min_choi_eigenvalue = 0.0;
    double tp_defect = 0.0;
};

CptpVerdict is_cptp(const DynamicalMap& m, double tol);

struct KrausSet {
    std::vector<Matrix> operators;
    std::vector<double> weights;  // Choi eigenvalues backing each operator
};

/// Kraus operators from the Choi eigendecomposition: K_a = sqrt(l_a) reshape(v_a)
/// for l_a above the cutoff. Throws InputError for a Choi matrix with an
/// eigenvalue below -tol.cp (no Kraus form exists).
KrausSet kraus_decompose(const ChoiMatrix& c, const Tolerances& tol = kDefaultTolerances);

Matrix apply_kraus(const KrausSet& k, const Matrix& rho);

/// max |sum_a K_a^dagger K_a - 1|
double completeness_residual(const KrausSet& k);

struct IntermediateMap {
    DynamicalMap candidate;
    bool determinate = false;   // short map numerically invertible
    bool cp = false;            // meaningful only when determinate
    double min_choi_eigenvalue = 0.0;
    Eigen::Index short_rank = 0;
};

/// Best linear candidate for the map over [t1, t*]: e_long o pinv(e_short).
/// A negative Choi eigenvalue certifies the family is not CP-divisible at t1.
IntermediateMap intermediate_map(const DynamicalMap& e_short, const DynamicalMap& e_long,
                                 const Tolerances& tol = kDefaultTolerances);

struct WitnessReport {
    double t1 = 0.0;
    double t_star = 0.0;
    double negativity_at_t1 = 0.0;
    double trace_distance = 0.0;  // between the qubit-1 outputs at t*
    Matrix reduced_correlated;    // qubit 1 at t* from the true joint state
    Matrix reduced_decorrelated;  // qubit 1 at t* from the product of marginals
    bool fires = false;           // trace_distance > tol.witness
};

/// Evolves rho_in to t1, then continues both the true joint state and the
/// product of its marginals to t*. Same qubit-1 marginal at t1 but different
/// outputs means no map acting on that marginal alone describes [t1, t*].
WitnessReport udm_witness_subinterval(const Matrix& k, const DensityMatrix& rho_in, double t1,
                                      double t_star, const Tolerances& tol = kDefaultTolerances);

struct LocalPairMaps {
    DynamicalMap first;   // acts on qubit 1, environment rho2
    DynamicalMap second;  // acts on qubit 2, environment rho1
};

LocalPairMaps local_pair_maps(const Matrix& k, const DensityMatrix& rho1, const DensityMatrix& rho2,
                              double t);

double superoperator_distance(const DynamicalMap& a, const DynamicalMap& b);

}  // namespace udmlab
