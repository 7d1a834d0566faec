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

#ifndef MIMOCONV_CHANNEL_HPP
#define MIMOCONV_CHANNEL_HPP

#include "numerics.hpp"
#include "power.hpp"
#include "rng.hpp"

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace mimoconv {

/// Exponential transmit correlation r_ij = rho^(spacing |i-j|) on a ULA.
struct CorrelationSpec {
    double rho = 0.0;
    double spacing = 1.0;

    void validate() const
    {
        if (!(rho >= 0.0 && rho < 1.0))
            throw std::invalid_argument("CorrelationSpec: rho must lie in [0, 1)");
        if (!(spacing > 0.0) || !std::isfinite(spacing))
            throw std::invalid_argument("CorrelationSpec: spacing must be positive and finite");
    }
};

/// M x K matrix of iid CN(0,1) entries. Entry (r, c) is draw r*K + c of the stream.
inline ComplexMatrix sample_iid(Index M, Index K, const RngStream &rng)
{
    if (M < 1 || K < 1)
        throw std::invalid_argument("sample_iid: M and K must be positive");
    ComplexMatrix H(M, K);
    const auto cols = static_cast<std::uint64_t>(K);
    for (Index r = 0; r < M; ++r)
        for (Index c = 0; c < K; ++c)
            H(r, c) = rng.complex_normal(static_cast<std::uint64_t>(r) * cols + static_cast<std::uint64_t>(c));
    return H;
}

inline HermitianMatrix exp_correlation_matrix(Index M, const CorrelationSpec &spec)
{
    if (M < 1)
        throw std::invalid_argument("exp_correlation_matrix: M must be positive");
    spec.validate();
    ComplexMatrix R(M, M);
    for (Index i = 0; i < M; ++i)
        for (Index j = 0; j < M; ++j)
            R(i, j) = std::pow(spec.rho, spec.spacing * static_cast<double>(std::abs(i - j)));
    return HermitianMatrix(std::move(R));
}

/// H = R^{1/2} H_iid.
inline ComplexMatrix apply_correlation(const ComplexMatrix &R_sqrt, const ComplexMatrix &H_iid)
{
    if (R_sqrt.rows() != R_sqrt.cols() || R_sqrt.cols() != H_iid.rows())
        throw std::invalid_argument("apply_correlation: R_sqrt is " + std::to_string(R_sqrt.rows()) + "x" +
                                    std::to_string(R_sqrt.cols()) + " but H_iid has " +
                                    std::to_string(H_iid.rows()) + " rows");
    return R_sqrt * H_iid;
}

/// G = H D_beta^{1/2}: column j scaled by sqrt(beta_j).
inline ComplexMatrix assemble_G(const ComplexMatrix &H, const LinkGains &beta)
{
    if (static_cast<std::size_t>(H.cols()) != beta.size())
        throw std::invalid_argument("assemble_G: H has " + std::to_string(H.cols()) + " columns but " +
                                    std::to_string(beta.size()) + " link gains were given");
    ComplexMatrix G = H;
    for (Index j = 0; j < G.cols(); ++j)
        G.col(j) *= std::sqrt(beta[static_cast<std::size_t>(j)]);
    return G;
}

struct ChannelSample {
    ComplexMatrix H_iid;
    ComplexMatrix H;
    ComplexMatrix G;
    LinkGains beta;
};

/// Channel generator for fixed (M, K, correlation, gains).
/// Holds R_t^{1/2}, computed once at construction and read-only afterwards.
class ChannelModel {
public:
    ChannelModel(Index M, Index K, std::optional<CorrelationSpec> correlation, LinkGains beta)
        : M_(M), K_(K), beta_(std::move(beta))
    {
        if (M < 1 || K < 1)
            throw std::invalid_argument("ChannelModel: M and K must be positive");
        if (beta_.size() != static_cast<std::size_t>(K))
            throw std::invalid_argument("ChannelModel: link gain count does not match K");
        if (correlation && correlation->rho > 0.0)
            R_sqrt_ = psd_sqrt(exp_correlation_matrix(M, *correlation));
        else if (correlation)
            correlation->validate();
    }

    Index M() const noexcept { return M_; }
    Index K() const noexcept { return K_; }
    const LinkGains &beta() const noexcept { return beta_; }
    bool correlated() const noexcept { return R_sqrt_.has_value(); }

    ChannelSample sample(const RngStream &rng) const
    {
        ChannelSample s;
        s.H_iid = sample_iid(M_, K_, rng);
        s.H = R_sqrt_ ? apply_correlation(*R_sqrt_, s.H_iid) : s.H_iid;
        s.G = assemble_G(s.H, beta_);
        s.beta = beta_;
        return s;
    }

private:
    Index M_;
    Index K_;
    LinkGains beta_;
    std::optional<ComplexMatrix> R_sqrt_;
};

} // namespace mimoconv

#endif
