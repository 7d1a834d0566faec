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

#ifndef MIMOCONV_POWER_HPP
#define MIMOCONV_POWER_HPP

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mimoconv {

/// Deterministic link-gain profile beta(x) = beta_max * eta^x on [0, x0],
/// with x0 chosen so that beta(x0) = beta_min.
struct PowerProfile {
    double beta_min = 0.1;
    double beta_max = 1.0;
    double eta = 0.5;

    void validate() const
    {
        if (!(beta_min > 0.0) || !std::isfinite(beta_min))
            throw std::invalid_argument("PowerProfile: beta_min must be positive and finite");
        if (!(beta_max >= beta_min) || !std::isfinite(beta_max))
            throw std::invalid_argument("PowerProfile: beta_max must be finite and >= beta_min");
        if (!(eta > 0.0 && eta < 1.0))
            throw std::invalid_argument("PowerProfile: eta must lie in (0, 1)");
    }

    bool equal_power() const noexcept { return beta_min == beta_max; }

    /// Upper end of the x interval, log(beta_min/beta_max)/log(eta).
    double x0() const { return std::log(beta_min / beta_max) / std::log(eta); }
};

/// Per-user link gains beta_1 >= ... >= beta_K > 0.
class LinkGains {
public:
    LinkGains() = default;

    explicit LinkGains(std::vector<double> values) : values_(std::move(values))
    {
        for (std::size_t j = 0; j < values_.size(); ++j)
        {
            if (!(values_[j] > 0.0) || !std::isfinite(values_[j]))
                throw std::invalid_argument("LinkGains: gain " + std::to_string(j) + " is not positive and finite");
            if (j > 0 && values_[j] > values_[j - 1])
                throw std::invalid_argument("LinkGains: gains must be non-increasing");
        }
    }

    static LinkGains equal(std::size_t K, double value = 1.0) { return LinkGains(std::vector<double>(K, value)); }

    std::size_t size() const noexcept { return values_.size(); }
    double operator[](std::size_t j) const { return values_[j]; }
    const std::vector<double> &values() const noexcept { return values_; }

    double mean() const
    {
        double s = 0.0;
        for (double b : values_)
            s += b;
        return s / static_cast<double>(values_.size());
    }

    double mean_inverse() const
    {
        double s = 0.0;
        for (double b : values_)
            s += 1.0 / b;
        return s / static_cast<double>(values_.size());
    }

private:
    std::vector<double> values_;
};

/// beta_j = beta(x0 (2j-1) / (2K)), j = 1..K.
///
/// Substituting eta^x0 = beta_min/beta_max gives
/// beta_j = beta_max (beta_min/beta_max)^((2j-1)/(2K)), which is what is
/// evaluated here. eta cancels, so the result does not depend on it.
inline LinkGains link_gains(std::size_t K, const PowerProfile &profile)
{
    if (K == 0)
        throw std::invalid_argument("link_gains: K must be at least 1");
    profile.validate();
    const double ratio = profile.beta_min / profile.beta_max;
    std::vector<double> beta(K);
    for (std::size_t j = 1; j <= K; ++j)
    {
        const double frac = static_cast<double>(2 * j - 1) / static_cast<double>(2 * K);
        beta[j - 1] = profile.beta_max * std::pow(ratio, frac);
    }
    return LinkGains(std::move(beta));
}

/// K -> infinity limits of (1/K) sum beta_j and (1/K) sum 1/beta_j.
struct LimitingMoments {
    double mean_beta = 1.0;
    double mean_inv_beta = 1.0;
};

/// Logarithmic means of beta(x) and 1/beta(x) over [0, x0].
inline LimitingMoments limiting_moments(const PowerProfile &profile)
{
    profile.validate();
    if (profile.equal_power())
        return {profile.beta_max, 1.0 / profile.beta_max};
    const double log_ratio = std::log(profile.beta_max / profile.beta_min);
    return {(profile.beta_max - profile.beta_min) / log_ratio,
            (1.0 / profile.beta_min - 1.0 / profile.beta_max) / log_ratio};
}

} // namespace mimoconv

#endif
