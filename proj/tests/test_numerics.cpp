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

#include <catch_amalgamated.hpp>

#include "mimoconv/channel.hpp"
#include "mimoconv/numerics.hpp"

#include <cmath>

using namespace mimoconv;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

double rel_frobenius(const ComplexMatrix &A, const ComplexMatrix &B)
{
    return (A - B).norm() / B.norm();
}

ComplexMatrix random_matrix(Index rows, Index cols, std::uint64_t stream)
{
    return sample_iid(rows, cols, RngStream(99, stream));
}

} // namespace

TEST_CASE("HermitianMatrix mirrors the lower triangle exactly")
{
    ComplexMatrix A(2, 2);
    A << Complex(2, 5), Complex(9, 9), Complex(1, 3), Complex(4, -1);
    const HermitianMatrix H(A);
    CHECK(H(0, 1) == std::conj(H(1, 0)));
    CHECK(H(0, 0) == Complex(2, 0));
    CHECK(H(1, 1) == Complex(4, 0));
    CHECK_THROWS_AS(HermitianMatrix(ComplexMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("gram_normalized")
{
    SECTION("scalar case")
    {
        ComplexMatrix A(1, 1);
        A << Complex(2, 0);
        CHECK(gram_normalized(A, 1.0)(0, 0) == Complex(4, 0));
    }
    SECTION("identity scaled")
    {
        const auto W = gram_normalized(ComplexMatrix::Identity(2, 2), 2.0);
        CHECK(rel_frobenius(W.matrix(), 0.5 * ComplexMatrix::Identity(2, 2)) < 1e-15);
    }
    SECTION("matches A^H A / s and the conjugate of A^T A^*")
    {
        const ComplexMatrix A = random_matrix(7, 4, 1);
        const auto W = gram_normalized(A, 7.0);
        const ComplexMatrix ref = A.adjoint() * A / 7.0;
        CHECK(rel_frobenius(W.matrix(), ref) < 1e-14);
        const ComplexMatrix transpose_form = A.transpose() * A.conjugate() / 7.0;
        CHECK(rel_frobenius(W.matrix(), transpose_form.conjugate()) < 1e-14);
    }
    SECTION("errors")
    {
        CHECK_THROWS_AS(gram_normalized(ComplexMatrix(3, 0), 1.0), std::invalid_argument);
        CHECK_THROWS_AS(gram_normalized(ComplexMatrix::Identity(2, 2), 0.0), std::invalid_argument);
    }
}

TEST_CASE("Gram matrices are PSD (property)")
{
    for (std::uint64_t s = 0; s < 50; ++s)
    {
        const Index M = 1 + static_cast<Index>(s % 9), K = 1 + static_cast<Index>((s * 7) % 6);
        const auto W = gram_normalized(random_matrix(M, K, s), static_cast<double>(M));
        const auto ev = hermitian_eigenvalues(W);
        REQUIRE(ev.minCoeff() >= -1e-12 * std::max(1.0, ev.maxCoeff()));
        for (Index i = 0; i < K; ++i)
            REQUIRE(W(i, i).real() >= 0.0);
    }
}

TEST_CASE("hermitian_eigenvalues")
{
    SECTION("identity")
    {
        const auto ev = hermitian_eigenvalues(HermitianMatrix::identity(3));
        for (Index i = 0; i < 3; ++i)
            CHECK_THAT(ev[i], WithinAbs(1.0, 1e-15));
    }
    SECTION("diagonal, ascending")
    {
        ComplexMatrix D = ComplexMatrix::Zero(2, 2);
        D(0, 0) = 4.0;
        D(1, 1) = 1.0;
        const auto ev = hermitian_eigenvalues(HermitianMatrix(D));
        CHECK_THAT(ev[0], WithinAbs(1.0, 1e-15));
        CHECK_THAT(ev[1], WithinAbs(4.0, 1e-15));
    }
    SECTION("[[2,1],[1,2]] has roots of (2-x)^2 - 1")
    {
        ComplexMatrix A(2, 2);
        A << 2.0, 1.0, 1.0, 2.0;
        const auto ev = hermitian_eigenvalues(HermitianMatrix(A));
        CHECK_THAT(ev[0], WithinAbs(1.0, 1e-14));
        CHECK_THAT(ev[1], WithinAbs(3.0, 1e-14));
    }
    SECTION("non-finite input")
    {
        ComplexMatrix A = ComplexMatrix::Identity(2, 2);
        A(1, 0) = Complex(std::nan(""), 0.0);
        CHECK_THROWS_AS(hermitian_eigenvalues(HermitianMatrix(A)), std::invalid_argument);
    }
    SECTION("eigenvalues sum to the trace and reconstruct (property)")
    {
        for (std::uint64_t s = 0; s < 20; ++s)
        {
            const auto W = gram_normalized(random_matrix(12, 6, 100 + s), 12.0);
            const auto ev = hermitian_eigenvalues(W);
            REQUIRE_THAT(ev.sum(), WithinRel(W.trace(), 1e-10));
            Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(W.matrix());
            const ComplexMatrix back = es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().adjoint();
            REQUIRE(rel_frobenius(back, W.matrix()) < 1e-10);
            for (Index i = 1; i < ev.size(); ++i)
                REQUIRE(ev[i] >= ev[i - 1]);
        }
    }
}

TEST_CASE("psd_sqrt")
{
    SECTION("identity")
    {
        CHECK(rel_frobenius(psd_sqrt(HermitianMatrix::identity(4)), ComplexMatrix::Identity(4, 4)) < 1e-14);
    }
    SECTION("diag(4, 9) -> diag(2, 3)")
    {
        ComplexMatrix D = ComplexMatrix::Zero(2, 2);
        D(0, 0) = 4.0;
        D(1, 1) = 9.0;
        const auto S = psd_sqrt(HermitianMatrix(D));
        CHECK_THAT(S(0, 0).real(), WithinAbs(2.0, 1e-14));
        CHECK_THAT(S(1, 1).real(), WithinAbs(3.0, 1e-14));
        CHECK(std::abs(S(0, 1)) < 1e-14);
    }
    SECTION("exponential correlation M=3 rho=0.5 multiplies back")
    {
        const auto R = exp_correlation_matrix(3, {0.5, 1.0});
        const auto S = psd_sqrt(R);
        CHECK(rel_frobenius(S * S, R.matrix()) < 1e-10);
        CHECK(rel_frobenius(S, S.adjoint()) < 1e-15);
    }
    SECTION("random PSD matrices, including rank-deficient (property)")
    {
        for (std::uint64_t s = 0; s < 20; ++s)
        {
            const Index K = 2 + static_cast<Index>(s % 5);
            const Index M = (s % 2) ? K + 3 : 1; // rank 1 when M = 1
            const auto R = gram_normalized(random_matrix(M, K, 300 + s), 1.0);
            const auto S = psd_sqrt(R);
            REQUIRE(rel_frobenius(S * S, R.matrix()) < 1e-10);
            REQUIRE(hermitian_eigenvalues(HermitianMatrix(S)).minCoeff() >= -1e-12);
        }
    }
    SECTION("indefinite input is rejected")
    {
        ComplexMatrix A(2, 2);
        A << 1.0, 2.0, 2.0, 1.0; // eigenvalues -1, 3
        CHECK_THROWS_AS(psd_sqrt(HermitianMatrix(A)), NotPsdError);
    }
}

TEST_CASE("inverse_trace")
{
    SECTION("identity of dim K")
    {
        CHECK_THAT(inverse_trace(HermitianMatrix::identity(5)), WithinRel(5.0, 1e-15));
    }
    SECTION("diag(1, 0.5)")
    {
        ComplexMatrix D = ComplexMatrix::Zero(2, 2);
        D(0, 0) = 1.0;
        D(1, 1) = 0.5;
        CHECK_THAT(inverse_trace(HermitianMatrix(D)), WithinRel(3.0, 1e-15));
    }
    SECTION("matches the eigenvalue oracle on Wishart samples (property)")
    {
        for (std::uint64_t s = 0; s < 30; ++s)
        {
            const Index K = 1 + static_cast<Index>(s % 12);
            const auto W = gram_normalized(random_matrix(K + 3 + static_cast<Index>(s % 4), K, 500 + s), 1.0);
            const auto ev = hermitian_eigenvalues(W);
            const double oracle = ev.cwiseInverse().sum();
            REQUIRE_THAT(inverse_trace(W), WithinRel(oracle, 1e-8));
        }
    }
    SECTION("singular matrices are rejected")
    {
        // Rank 1: outer product of one column.
        const auto W = gram_normalized(random_matrix(1, 3, 7), 1.0);
        CHECK_THROWS_AS(inverse_trace(W), SingularMatrixError);
        ComplexMatrix D = ComplexMatrix::Identity(2, 2);
        D(1, 1) = 1e-14;
        CHECK_THROWS_AS(inverse_trace(HermitianMatrix(D)), SingularMatrixError);
    }
}
