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

#ifndef MIMOCONV_PRECODING_HPP
#define MIMOCONV_PRECODING_HPP

#include "numerics.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace mimoconv {

/// Transmit SNR rho_f (linear) and antenna ratio alpha = M/K.
struct SystemParams {
    double rho_f = 1.0;
    double alpha = 10.0;

    void validate() const
    {
        if (!(rho_f > 0.0) || !std::isfinite(rho_f))
            throw std::invalid_argument("SystemParams: rho_f must be positive and finite");
        if (!(alpha > 0.0) || !std::isfinite(alpha))
            throw std::invalid_argument("SystemParams: alpha must be positive and finite");
    }
};

struct PrecoderResult {
    double zf_snr = 0.0;
    double zf_gamma = 0.0;
    std::vector<double> mf_sinr;
    double mf_gamma = 0.0;
};

// The *_from_gram overloads take the unnormalized Gram matrix G^H G so a
// single O(MK^2) product can feed both precoders and the channel metrics.

inline double zf_gamma_from_gram(const HermitianMatrix &gram)
{
    return inverse_trace(gram) / static_cast<double>(gram.dim());
}

/// gamma = tr((G^H G)^{-1}) / K.
inline double zf_gamma(const ComplexMatrix &G)
{
    if (G.rows() < G.cols())
        throw SingularMatrixError("zf_gamma: Gram matrix of an M<K channel is singular");
    return zf_gamma_from_gram(gram_normalized(G, 1.0));
}

inline double zf_snr_from_gram(const HermitianMatrix &gram, const SystemParams &params)
{
    return params.rho_f / inverse_trace(gram);
}

/// rho_f / tr((G^H G)^{-1}), common to every user.
inline double zf_snr(const ComplexMatrix &G, const SystemParams &params)
{
    params.validate();
    return params.rho_f / (static_cast<double>(G.cols()) * zf_gamma(G));
}

/// rho_f (alpha - 1) / mean_inv_beta. Equal powers: mean_inv_beta = 1.
inline double zf_snr_limit(const SystemParams &params, double mean_inv_beta)
{
    params.validate();
    if (!(params.alpha > 1.0))
        throw std::invalid_argument("zf_snr_limit: alpha must exceed 1");
    if (!(mean_inv_beta > 0.0))
        throw std::invalid_argument("zf_snr_limit: mean_inv_beta must be positive");
    return params.rho_f * (params.alpha - 1.0) / mean_inv_beta;
}

inline double mf_gamma_from_gram(const HermitianMatrix &gram)
{
    const double tr = gram.trace();
    if (!(tr > 0.0))
        throw std::invalid_argument("mf_gamma: channel matrix is zero");
    return tr / static_cast<double>(gram.dim());
}

/// gamma = ||G||_F^2 / K.
inline double mf_gamma(const ComplexMatrix &G)
{
    if (G.cols() == 0)
        throw std::invalid_argument("mf_gamma: channel has no columns");
    const double fro = G.squaredNorm();
    if (!(fro > 0.0))
        throw std::invalid_argument("mf_gamma: channel matrix is zero");
    return fro / static_cast<double>(G.cols());
}

/// Per-user matched-filter SINR:
///   c |g_i^H g_i|^2 / (1 + c sum_{k != i} |g_i^H g_k|^2),  c = rho_f / (K gamma).
inline std::vector<double> mf_sinr_from_gram(const HermitianMatrix &gram, const SystemParams &params)
{
    params.validate();
    const Index K = gram.dim();
    const double c = params.rho_f / (static_cast<double>(K) * mf_gamma_from_gram(gram));
    const ComplexMatrix &A = gram.matrix();
    std::vector<double> sinr(static_cast<std::size_t>(K));
    for (Index i = 0; i < K; ++i)
    {
        double interference = 0.0;
        for (Index k = 0; k < K; ++k)
            if (k != i)
                interference += std::norm(A(k, i));
        sinr[static_cast<std::size_t>(i)] = c * std::norm(A(i, i)) / (1.0 + c * interference);
    }
    return sinr;
}

inline std::vector<double> mf_sinr(const ComplexMatrix &G, const SystemParams &params)
{
    return mf_sinr_from_gram(gram_normalized(G, 1.0), params);
}

/// rho_f alpha beta_i^2 / (mean_beta + rho_f beta_i mean_beta).
inline double mf_sinr_limit(const SystemParams &params, double beta_i, double mean_beta)
{
    params.validate();
    if (!(beta_i > 0.0) || !(mean_beta > 0.0))
        throw std::invalid_argument("mf_sinr_limit: gains must be positive");
    return params.rho_f * params.alpha * beta_i * beta_i / (mean_beta + params.rho_f * beta_i * mean_beta);
}

/// Both precoders from one Gram product. ZF is skipped when with_zf is false.
inline PrecoderResult evaluate_precoders(const HermitianMatrix &gram, const SystemParams &params, bool with_zf = true,
                                         bool with_mf = true)
{
    PrecoderResult r;
    if (with_zf)
    {
        const double tr_inv = inverse_trace(gram);
        r.zf_gamma = tr_inv / static_cast<double>(gram.dim());
        r.zf_snr = params.rho_f / tr_inv;
    }
    if (with_mf)
    {
        r.mf_gamma = mf_gamma_from_gram(gram);
        r.mf_sinr = mf_sinr_from_gram(gram, params);
    }
    return r;
}

} // namespace mimoconv

#endif
