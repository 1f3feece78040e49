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

// JSON encoding of numerical results. Reals are rounded to 15 significant
// digits; complex numbers are [re, im] pairs; matrices are arrays of rows.

#pragma once

#include <json.hpp>

#include "udmlab/linalg.hpp"

namespace udmlab::cli::report {

nlohmann::json number(double x);
nlohmann::json complex(Complex z);
nlohmann::json matrix(const Matrix& m);
nlohmann::json vector(const Vector& v);
nlohmann::json reals(const RealVector& v);

}  // namespace udmlab::cli::report
