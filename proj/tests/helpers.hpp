// Copyright 2026 The qfibounds Authors
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

#include <complex>
#include <initializer_list>
#include <vector>

#include <Eigen/Dense>

#include "qfib/rng.hpp"
#include "qfib/states.hpp"

namespace qtest {

using Complex = std::complex<double>;

inline Eigen::MatrixXcd diag_matrix(std::initializer_list<double> values) {
    Eigen::VectorXd v(static_cast<Eigen::Index>(values.size()));
    Eigen::Index i = 0;
    for (double x : values) {
        v(i++) = x;
    }
    return v.cast<Complex>().asDiagonal();
}

inline qfib::DensityMatrix diag_density(std::initializer_list<double> values) {
    return qfib::DensityMatrix(qfib::HermitianOperator(diag_matrix(values)));
}

inline Eigen::MatrixXcd random_complex_matrix(int rows, int cols, std::uint64_t seed) {
    qfib::Rng rng(seed);
    Eigen::MatrixXcd m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) {
            m(i, j) = rng.cnormal();
        }
    }
    return m;
}

inline qfib::HermitianOperator random_hermitian(int dim, std::uint64_t seed) {
    const Eigen::MatrixXcd g = random_complex_matrix(dim, dim, seed);
    return qfib::HermitianOperator(0.5 * (g + g.adjoint()));
}

inline double max_abs_diff(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace qtest
