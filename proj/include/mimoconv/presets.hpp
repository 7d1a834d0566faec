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

#ifndef MIMOCONV_PRESETS_HPP
#define MIMOCONV_PRESETS_HPP

#include "montecarlo.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace mimoconv {

// Parameters not fixed by the figure captions. They are echoed into every output row.
inline constexpr double kPresetRhoF = 1.0;
inline constexpr double kPresetAlpha = 10.0;
inline constexpr std::size_t kDefaultTrials = 1000;
inline constexpr std::uint64_t kDefaultSeed = 1;

inline PowerProfile preset_profile()
{
    return {0.1, 1.0, 0.5};
}

inline const std::vector<std::string> &preset_names()
{
    static const std::vector<std::string> names = {"fig1", "fig2", "fig3", "fig4", "fig5", "fig6", "fig7"};
    return names;
}

/// Scenarios reproducing one figure. Throws ConfigError for an unknown name.
inline std::vector<Scenario> preset_scenarios(const std::string &name, std::size_t trials = kDefaultTrials,
                                              std::uint64_t seed = kDefaultSeed)
{
    auto base = [&]() {
        Scenario s;
        s.rho_f = kPresetRhoF;
        s.trials = trials;
        s.seed = seed;
        return s;
    };
    auto metrics_fixed_K = [&](Index K, std::vector<Index> M) {
        Scenario s = base();
        s.mode = SweepMode::fixed_K;
        s.K = K;
        s.sweep = std::move(M);
        s.stats = {true, false, false};
        return s;
    };
    auto metrics_fixed_alpha = [&](std::vector<Index> K) {
        Scenario s = base();
        s.mode = SweepMode::fixed_alpha;
        s.alpha = kPresetAlpha;
        s.sweep = std::move(K);
        s.stats = {true, false, false};
        return s;
    };
    auto precoders = [&](bool unequal, std::optional<double> corr) {
        Scenario s = base();
        s.mode = SweepMode::fixed_alpha;
        s.alpha = kPresetAlpha;
        s.sweep = {1, 2, 5, 10, 20, 50, 100};
        s.stats = {false, true, true};
        if (unequal)
            s.profile = preset_profile();
        if (corr)
            s.correlation = CorrelationSpec{*corr, 1.0};
        return s;
    };

    if (name == "fig1")
        return {metrics_fixed_K(10, {64, 100, 200, 500, 1000, 2000, 5000, 10000}),
                metrics_fixed_K(50, {64, 100, 200, 500, 1000, 2000, 5000, 10000})};
    if (name == "fig2")
        return {metrics_fixed_alpha({5, 10, 20, 50, 100, 200})};
    if (name == "fig3")
        return {metrics_fixed_K(10, {64, 128, 256, 512, 1024, 2048, 4096}), metrics_fixed_alpha({8, 16, 32, 64, 128})};
    if (name == "fig4")
        return {precoders(false, std::nullopt)};
    if (name == "fig5")
        return {precoders(true, std::nullopt)};
    if (name == "fig6")
        return {precoders(false, 0.5), precoders(false, 0.9)};
    if (name == "fig7")
        return {precoders(true, 0.5), precoders(true, 0.9)};
    throw ConfigError("unknown preset '" + name + "' (expected fig1..fig7)");
}

} // namespace mimoconv

#endif
