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

#ifndef MIMOCONV_MONTECARLO_HPP
#define MIMOCONV_MONTECARLO_HPP

#include "channel.hpp"
#include "errors.hpp"
#include "metrics.hpp"
#include "power.hpp"
#include "precoding.hpp"
#include "rng.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <exception>
#include <limits>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace mimoconv {

enum class SweepMode { fixed_K, fixed_alpha };

inline const char *to_string(SweepMode mode)
{
    return mode == SweepMode::fixed_K ? "fixed-K" : "fixed-alpha";
}

struct StatSelection {
    bool metrics = true;
    bool zf = true;
    bool mf = true;
};

struct SweepPoint {
    Index M = 0;
    Index K = 0;
    double alpha = 0.0; // M / K
};

/// One convergence experiment.
///
/// fixed-K: K is held and `sweep` lists M values.
/// fixed-alpha: alpha = M/K is held and `sweep` lists K values; alpha*K must be integral.
struct Scenario {
    SweepMode mode = SweepMode::fixed_alpha;
    Index K = 10;
    double alpha = 10.0;
    std::vector<Index> sweep;
    std::optional<CorrelationSpec> correlation;
    std::optional<PowerProfile> profile; // absent: equal unit gains
    double rho_f = 1.0;
    std::size_t trials = 1000;
    std::uint64_t seed = 1;
    StatSelection stats;
    bool metrics_on_G = false; // metrics use W built from G instead of H

    std::vector<SweepPoint> points() const
    {
        std::vector<SweepPoint> out;
        out.reserve(sweep.size());
        for (Index v : sweep)
        {
            if (mode == SweepMode::fixed_K)
                out.push_back({v, K, static_cast<double>(v) / static_cast<double>(K)});
            else
                out.push_back({static_cast<Index>(std::llround(alpha * static_cast<double>(v))), v, alpha});
        }
        return out;
    }

    void validate() const
    {
        if (trials == 0)
            throw ConfigError("trials must be at least 1");
        if (!(rho_f > 0.0) || !std::isfinite(rho_f))
            throw ConfigError("rho-f must be positive and finite");
        if (!stats.metrics && !stats.zf && !stats.mf)
            throw ConfigError("no statistics selected");
        for (std::size_t i = 0; i < sweep.size(); ++i)
        {
            if (sweep[i] < 1)
                throw ConfigError("sweep values must be positive");
            if (i > 0 && sweep[i] <= sweep[i - 1])
                throw ConfigError("sweep must be strictly increasing");
        }
        if (mode == SweepMode::fixed_K && K < 1)
            throw ConfigError("K must be at least 1");
        if (mode == SweepMode::fixed_alpha)
        {
            if (!(alpha > 1.0) || !std::isfinite(alpha))
                throw ConfigError("alpha must exceed 1 in fixed-alpha mode");
            for (Index k : sweep)
            {
                const double m = alpha * static_cast<double>(k);
                if (std::abs(m - std::round(m)) > 1e-9 * m)
                    throw ConfigError("alpha*K is not an integer for K=" + std::to_string(k));
            }
        }
        try
        {
            if (correlation)
                correlation->validate();
            if (profile)
                profile->validate();
        }
        catch (const std::invalid_argument &e)
        {
            throw ConfigError(e.what());
        }
        if (stats.zf)
            for (const auto &p : points())
                if (p.M <= p.K)
                    throw ConfigError("zero-forcing needs M > K, got M=" + std::to_string(p.M) +
                                      " K=" + std::to_string(p.K));
    }
};

struct StatSummary {
    std::string name;
    double mean = 0.0;
    double std_dev = 0.0;
    double std_error = 0.0;
    std::size_t trials = 0;
    std::optional<double> limit;
};

struct PointResult {
    SweepPoint point;
    std::vector<StatSummary> stats;
    std::size_t degenerate_trials = 0;

    const StatSummary *find(const std::string &name) const
    {
        for (const auto &s : stats)
            if (s.name == name)
                return &s;
        return nullptr;
    }
};

struct SweepResult {
    Scenario scenario;
    std::vector<PointResult> points;
};

/// Mean, sample standard deviation (n-1) and standard error, summed in index order.
/// A non-finite sample makes the mean non-finite and the spread NaN.
inline StatSummary summarize(std::string name, const std::vector<double> &x)
{
    StatSummary s;
    s.name = std::move(name);
    s.trials = x.size();
    if (x.empty())
        return s;
    const double n = static_cast<double>(x.size());
    double sum = 0.0;
    for (double v : x)
        sum += v;
    s.mean = sum / n;
    if (!std::isfinite(s.mean))
    {
        s.std_dev = s.std_error = std::numeric_limits<double>::quiet_NaN();
        return s;
    }
    double ss = 0.0;
    for (double v : x)
        ss += (v - s.mean) * (v - s.mean);
    s.std_dev = x.size() > 1 ? std::sqrt(ss / (n - 1.0)) : 0.0;
    s.std_error = s.std_dev / std::sqrt(n);
    return s;
}

namespace detail {

inline LinkGains gains_for(const Scenario &sc, Index K)
{
    return sc.profile ? link_gains(static_cast<std::size_t>(K), *sc.profile)
                      : LinkGains::equal(static_cast<std::size_t>(K));
}

inline LimitingMoments moments_for(const Scenario &sc)
{
    return sc.profile ? limiting_moments(*sc.profile) : LimitingMoments{1.0, 1.0};
}

// Per-trial values in a fixed layout: [mad, lambda_ratio, dominance][zf_snr][mf_mean, mf_1..mf_K].
inline std::vector<double> evaluate_trial(const Scenario &sc, const ChannelModel &model, const RngStream &rng)
{
    const ChannelSample s = model.sample(rng);
    const Index M = model.M();
    std::vector<double> out;
    if (sc.stats.metrics)
    {
        const ConvergenceMetrics m = convergence_metrics(gram_normalized(sc.metrics_on_G ? s.G : s.H, static_cast<double>(M)));
        out.insert(out.end(), {m.mad, m.lambda_ratio, m.diagonal_dominance});
    }
    if (sc.stats.zf || sc.stats.mf)
    {
        const SystemParams params{sc.rho_f, static_cast<double>(M) / static_cast<double>(model.K())};
        const PrecoderResult r = evaluate_precoders(gram_normalized(s.G, 1.0), params, sc.stats.zf, sc.stats.mf);
        if (sc.stats.zf)
            out.push_back(r.zf_snr);
        if (sc.stats.mf)
        {
            double sum = 0.0;
            for (double v : r.mf_sinr)
                sum += v;
            out.push_back(sum / static_cast<double>(r.mf_sinr.size()));
            out.insert(out.end(), r.mf_sinr.begin(), r.mf_sinr.end());
        }
    }
    return out;
}

struct TrialSlot {
    std::vector<double> values;
    bool degenerate = false;
    std::exception_ptr error;
};

inline PointResult run_point(const Scenario &sc, const SweepPoint &pt, unsigned workers)
{
    const ChannelModel model(pt.M, pt.K, sc.correlation, gains_for(sc, pt.K));
    const std::size_t n = sc.trials;
    std::vector<TrialSlot> slots(n);
    std::atomic<std::size_t> next{0};

    auto work = [&]() {
        for (std::size_t t = next++; t < n; t = next++)
        {
            TrialSlot &slot = slots[t];
            try
            {
                try
                {
                    slot.values = evaluate_trial(sc, model, RngStream(sc.seed, t));
                }
                catch (const SingularMatrixError &)
                {
                    // One retry on a stream id outside [0, trials).
                    slot.degenerate = true;
                    slot.values = evaluate_trial(sc, model, RngStream(sc.seed, n + t));
                }
            }
            catch (...)
            {
                slot.error = std::current_exception();
            }
        }
    };

    const unsigned pool = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::min<std::size_t>(n, 1u << 16))));
    if (pool == 1)
        work();
    else
    {
        std::vector<std::thread> threads;
        threads.reserve(pool);
        for (unsigned w = 0; w < pool; ++w)
            threads.emplace_back(work);
        for (auto &th : threads)
            th.join();
    }

    PointResult result;
    result.point = pt;
    for (const auto &slot : slots)
    {
        if (slot.error)
            std::rethrow_exception(slot.error);
        result.degenerate_trials += slot.degenerate ? 1 : 0;
    }

    std::size_t col = 0;
    auto column = [&](std::size_t c) {
        std::vector<double> x(n);
        for (std::size_t t = 0; t < n; ++t)
            x[t] = slots[t].values[c];
        return x;
    };

    if (sc.stats.metrics)
    {
        result.stats.push_back(summarize("mad", column(col++)));
        result.stats.push_back(summarize("lambda_ratio", column(col++)));
        result.stats.push_back(summarize("diagonal_dominance", column(col++)));
    }
    const SystemParams params{sc.rho_f, pt.alpha};
    const bool has_limit = pt.alpha > 1.0;
    const LimitingMoments mom = moments_for(sc);
    if (sc.stats.zf)
    {
        auto s = summarize("zf_snr", column(col++));
        if (has_limit)
            s.limit = zf_snr_limit(params, mom.mean_inv_beta);
        result.stats.push_back(std::move(s));
    }
    if (sc.stats.mf)
    {
        const LinkGains &beta = model.beta();
        std::vector<double> user_limits(beta.size());
        double limit_sum = 0.0;
        for (std::size_t i = 0; i < beta.size(); ++i)
        {
            user_limits[i] = mf_sinr_limit(params, beta[i], mom.mean_beta);
            limit_sum += user_limits[i];
        }
        auto mean = summarize("mf_sinr_mean", column(col++));
        if (has_limit)
            mean.limit = limit_sum / static_cast<double>(beta.size());
        result.stats.push_back(std::move(mean));
        for (std::size_t i = 0; i < beta.size(); ++i)
        {
            auto s = summarize("mf_sinr_user_" + std::to_string(i + 1), column(col++));
            if (has_limit)
                s.limit = user_limits[i];
            result.stats.push_back(std::move(s));
        }
    }
    return result;
}

} // namespace detail

inline unsigned default_workers()
{
    return std::max(1u, std::thread::hardware_concurrency());
}

/// Runs every sweep point with `trials` independent draws (stream id = trial index).
/// Output is identical for any worker count.
inline SweepResult run_scenario(const Scenario &scenario, unsigned workers = default_workers())
{
    scenario.validate();
    SweepResult result;
    result.scenario = scenario;
    for (const auto &pt : scenario.points())
        result.points.push_back(detail::run_point(scenario, pt, workers));
    return result;
}

struct LimitGap {
    Index M = 0;
    Index K = 0;
    std::string statistic;
    double mean = 0.0;
    double limit = 0.0;
    double gap = 0.0; // |mean - limit| / limit
};

inline std::vector<LimitGap> compare_to_limit(const SweepResult &result)
{
    std::vector<LimitGap> out;
    for (const auto &p : result.points)
        for (const auto &s : p.stats)
            if (s.limit)
                out.push_back({p.point.M, p.point.K, s.name, s.mean, *s.limit, std::abs(s.mean - *s.limit) / std::abs(*s.limit)});
    return out;
}

} // namespace mimoconv

#endif
