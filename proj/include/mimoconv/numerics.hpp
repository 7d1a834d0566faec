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

#ifndef MIMOCONV_NUMERICS_HPP
#define MIMOCONV_NUMERICS_HPP

#include "errors.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace mimoconv {

using Complex = std::complex<double>;
using Index = Eigen::Index;
using ComplexMatrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

/// Eigenvalues below this fraction of the largest count as zero.
inline constexpr double kSingularRelTol = 1e-12;

inline bool all_finite(const ComplexMatrix &A)
{
    return A.allFinite();
}

/// Square matrix with entry(i,j) == conj(entry(j,i)) and a real diagonal.
///
/// The symmetry is exact: construction keeps the lower triangle of the input,
/// mirrors it into the upper triangle and drops the imaginary part of the
/// diagonal.
class HermitianMatrix {
public:
    HermitianMatrix() = default;

    explicit HermitianMatrix(ComplexMatrix lower) : data_(std::move(lower))
    {
        if (data_.rows() != data_.cols())
            throw std::invalid_argument("HermitianMatrix: matrix is not square (" + std::to_string(data_.rows()) +
                                        "x" + std::to_string(data_.cols()) + ")");
        const Index n = data_.rows();
        for (Index j = 0; j < n; ++j)
        {
            data_(j, j) = Complex(data_(j, j).real(), 0.0);
            for (Index i = j + 1; i < n; ++i)
                data_(j, i) = std::conj(data_(i, j));
        }
    }

    static HermitianMatrix identity(Index dim) { return HermitianMatrix(ComplexMatrix::Identity(dim, dim)); }

    Index dim() const noexcept { return data_.rows(); }
    const ComplexMatrix &matrix() const noexcept { return data_; }
    Complex operator()(Index i, Index j) const { return data_(i, j); }

    double trace() const { return data_.diagonal().real().sum(); }

private:
    ComplexMatrix data_;
};

/// (A^H A) / scale. Equal to the entrywise conjugate of A^T A^* / scale, so
/// traces, eigenvalues and entry magnitudes agree with that form.
inline HermitianMatrix gram_normalized(const ComplexMatrix &A, double scale)
{
    if (A.rows() == 0 || A.cols() == 0)
        throw std::invalid_argument("gram_normalized: matrix has a zero dimension");
    if (!(scale > 0.0) || !std::isfinite(scale))
        throw std::invalid_argument("gram_normalized: scale must be positive and finite");
    ComplexMatrix lower = ComplexMatrix::Zero(A.cols(), A.cols());
    lower.selfadjointView<Eigen::Lower>().rankUpdate(A.adjoint(), 1.0 / scale);
    return HermitianMatrix(std::move(lower));
}

/// Real eigenvalues of a Hermitian matrix, ascending.
inline RealVector hermitian_eigenvalues(const HermitianMatrix &W)
{
    if (!all_finite(W.matrix()))
        throw std::invalid_argument("hermitian_eigenvalues: non-finite entries");
    if (W.dim() == 0)
        return RealVector();
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(W.matrix(), Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("hermitian_eigenvalues: eigensolver did not converge");
    return solver.eigenvalues();
}

/// Principal square root of a positive semi-definite Hermitian matrix.
/// Eigenvalues in [-1e-12 * lambda_max, 0) are clamped to zero.
inline ComplexMatrix psd_sqrt(const HermitianMatrix &R)
{
    if (!all_finite(R.matrix()))
        throw std::invalid_argument("psd_sqrt: non-finite entries");
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(R.matrix(), Eigen::ComputeEigenvectors);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("psd_sqrt: eigensolver did not converge");
    RealVector lambda = solver.eigenvalues();
    const double top = std::max(0.0, lambda.maxCoeff());
    const double tol = kSingularRelTol * top;
    for (Index i = 0; i < lambda.size(); ++i)
    {
        if (lambda[i] < -tol)
            throw NotPsdError("psd_sqrt: eigenvalue " + std::to_string(lambda[i]) + " below tolerance -" +
                              std::to_string(tol));
        lambda[i] = std::sqrt(std::max(0.0, lambda[i]));
    }
    const ComplexMatrix &V = solver.eigenvectors();
    ComplexMatrix S = V * lambda.asDiagonal() * V.adjoint();
    return HermitianMatrix(std::move(S)).matrix();
}

/// tr(W^{-1}) for Hermitian positive-definite W.
///
/// Factors W = L L^H, inverts L by forward substitution and returns
/// ||L^{-1}||_F^2. Throws SingularMatrixError when a pivot collapses or when
/// tr(W^{-1}) tr(W) > 1e12, which holds whenever lambda_min < 1e-12 lambda_max.
inline double inverse_trace(const HermitianMatrix &W)
{
    const Index n = W.dim();
    if (n == 0)
        throw std::invalid_argument("inverse_trace: empty matrix");
    if (!all_finite(W.matrix()))
        throw std::invalid_argument("inverse_trace: non-finite entries");

    const ComplexMatrix &A = W.matrix();
    const double max_diag = A.diagonal().real().maxCoeff();
    if (!(max_diag > 0.0))
        throw SingularMatrixError("inverse_trace: non-positive diagonal");
    const double pivot_floor = kSingularRelTol * max_diag;

    // Column-oriented Cholesky on the lower triangle.
    ComplexMatrix L = ComplexMatrix::Zero(n, n);
    for (Index j = 0; j < n; ++j)
    {
        double d = A(j, j).real();
        for (Index k = 0; k < j; ++k)
            d -= std::norm(L(j, k));
        if (!(d > pivot_floor))
            throw SingularMatrixError("inverse_trace: Cholesky pivot " + std::to_string(j) + " collapsed");
        const double ljj = std::sqrt(d);
        L(j, j) = ljj;
        for (Index i = j + 1; i < n; ++i)
        {
            Complex s = A(i, j);
            for (Index k = 0; k < j; ++k)
                s -= L(i, k) * std::conj(L(j, k));
            L(i, j) = s / ljj;
        }
    }

    // Column c of L^{-1}: solve L x = e_c; x is zero above row c.
    double total = 0.0;
    Eigen::VectorXcd x(n);
    for (Index c = 0; c < n; ++c)
    {
        x.setZero();
        x[c] = 1.0 / L(c, c).real();
        total += std::norm(x[c]);
        for (Index i = c + 1; i < n; ++i)
        {
            Complex s = 0.0;
            for (Index k = c; k < i; ++k)
                s -= L(i, k) * x[k];
            x[i] = s / L(i, i).real();
            total += std::norm(x[i]);
        }
    }

    if (!std::isfinite(total) || total * W.trace() > 1.0 / kSingularRelTol)
        throw SingularMatrixError("inverse_trace: condition number exceeds 1e12");
    return total;
}

} // namespace mimoconv

#endif
