// SPDX-License-Identifier: Apache-2.0
//
// mimo-converge: convergence simulator for massive MIMO channels and precoders
// Copyright (C) 2026 The mimo-converge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef MIMOCONV_METRICS_HPP
#define MIMOCONV_METRICS_HPP

#include "numerics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace mimoconv {

/// Channel convergence metrics of W = Gram/M.
/// diagonal_dominance is +infinity when W has no non-zero off-diagonal entry.
struct ConvergenceMetrics {
    double mad = 0.0;
    double lambda_ratio = 1.0;
    double diagonal_dominance = std::numeric_limits<double>::infinity();
};

/// E = W - I.
inline ComplexMatrix deviation_matrix(const HermitianMatrix &W)
{
    ComplexMatrix E = W.matrix();
    E.diagonal().array() -= 1.0;
    return E;
}

/// (1/K^2) sum over all i, j (diagonal included) of |E_ij|.
inline double mad(const ComplexMatrix &E)
{
    if (E.rows() != E.cols() || E.rows() == 0)
        throw std::invalid_argument("mad: E must be square and non-empty");
    return E.cwiseAbs().sum() / static_cast<double>(E.rows() * E.cols());
}

inline double lambda_ratio_from_eigenvalues(const RealVector &ascending)
{
    const double lo = ascending[0];
    const double hi = ascending[ascending.size() - 1];
    if (!(lo > kSingularRelTol * hi))
        throw SingularMatrixError("lambda_ratio: smallest eigenvalue is not positive relative to the largest");
    return hi / lo;
}

/// lambda_max(W) / lambda_min(W).
inline double lambda_ratio(const HermitianMatrix &W)
{
    if (W.dim() == 0)
        throw std::invalid_argument("lambda_ratio: empty matrix");
    return lambda_ratio_from_eigenvalues(hermitian_eigenvalues(W));
}

/// tr(W) / sum_{i != j} |W_ij|.
inline double diagonal_dominance(const HermitianMatrix &W)
{
    const ComplexMatrix &A = W.matrix();
    double off = 0.0;
    for (Index j = 0; j < A.cols(); ++j)
        for (Index i = 0; i < A.rows(); ++i)
            if (i != j)
                off += std::abs(A(i, j));
    if (off == 0.0)
        return std::numeric_limits<double>::infinity();
    return W.trace() / off;
}

inline ConvergenceMetrics convergence_metrics(const HermitianMatrix &W)
{
    return {mad(deviation_matrix(W)), lambda_ratio(W), diagonal_dominance(W)};
}

} // namespace mimoconv

#endif
