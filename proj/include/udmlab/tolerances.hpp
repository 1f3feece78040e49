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

namespace udmlab {

// Global numerical tolerances. Every report emitted by the CLI embeds the
// set that was actually in force.
struct Tolerances {
    double hermitian = 1e-10;       // max |m - m^dagger| on inputs
    double unitary = 1e-10;         // max |U U^dagger - 1|
    double reconstruction = 1e-9;   // factorization identities
    double normalization = 1e-10;   // |norm - 1|, |trace - 1|
    double positivity = 1e-9;       // smallest admissible eigenvalue is -positivity
    double entanglement = 1e-6;     // "entangled at t1" verdicts
    double separable = 1e-9;        // circuit block audits
    double cp = 1e-7;               // Choi eigenvalue floor
    double pinv_cutoff = 1e-10;     // relative singular value cutoff
    double kraus_cutoff = 1e-10;    // Choi eigenvalues kept as Kraus weights
    double witness = 1e-6;          // trace distance above which the no-UDM witness fires
    double schmidt = 1e-9;          // relative cutoff for operator Schmidt rank
};

inline constexpr Tolerances kDefaultTolerances{};

}  // namespace udmlab
