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

#include "udmlab/cli/report.hpp"

#include "udmlab/format.hpp"

namespace udmlab::cli::report {

nlohmann::json number(double x) {
    return round_sig15(x);
}

nlohmann::json complex(Complex z) {
    return nlohmann::json::array({number(z.real()), number(z.imag())});
}

nlohmann::json matrix(const Matrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c)
            row.push_back(complex(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

nlohmann::json vector(const Vector& v) {
    nlohmann::json out = nlohmann::json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i)
        out.push_back(complex(v(i)));
    return out;
}

nlohmann::json reals(const RealVector& v) {
    nlohmann::json out = nlohmann::json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i)
        out.push_back(number(v(i)));
    return out;
}

}  // namespace udmlab::cli::report
