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

#ifndef MIMOCONV_CLI_HPP
#define MIMOCONV_CLI_HPP

#include "montecarlo.hpp"
#include "output.hpp"
#include "presets.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace mimoconv {

/// Bad command line or config file. Maps to exit code 2.
class UsageError : public ConfigError {
public:
    explicit UsageError(const std::string &what) : ConfigError(what) {}
};

/// --help was requested; what() is the help text.
class HelpRequested : public std::runtime_error {
public:
    explicit HelpRequested(const std::string &text) : std::runtime_error(text) {}
};

struct RunConfig {
    std::optional<std::string> preset;
    std::vector<Scenario> scenarios;
    std::string output = "-";
    OutputFormat format = OutputFormat::csv;
    unsigned workers = 1;
};

/// Parses "a:b:step", "a:b", "a,b,c" or a single integer into an ascending list.
inline std::vector<Index> parse_index_list(const std::string &text, const std::string &key)
{
    auto to_int = [&](const std::string &s) -> Index {
        try
        {
            return static_cast<Index>(parse_integer<long long>(s));
        }
        catch (const std::invalid_argument &)
        {
            throw UsageError("--" + key + ": '" + s + "' is not an integer");
        }
    };
    std::vector<Index> out;
    if (text.find(':') != std::string::npos)
    {
        std::vector<std::string> parts;
        std::stringstream ss(text);
        for (std::string p; std::getline(ss, p, ':');)
            parts.push_back(p);
        if (parts.size() < 2 || parts.size() > 3)
            throw UsageError("--" + key + ": range must be start:stop[:step]");
        const Index start = to_int(parts[0]), stop = to_int(parts[1]);
        const Index step = parts.size() == 3 ? to_int(parts[2]) : 1;
        if (step < 1 || stop < start)
            throw UsageError("--" + key + ": empty or descending range '" + text + "'");
        for (Index v = start; v <= stop; v += step)
            out.push_back(v);
    }
    else
    {
        std::stringstream ss(text);
        for (std::string p; std::getline(ss, p, ',');)
            out.push_back(to_int(p));
    }
    if (out.empty())
        throw UsageError("--" + key + ": no values");
    return out;
}

inline StatSelection parse_stats(const std::string &text)
{
    StatSelection s{false, false, false};
    std::stringstream ss(text);
    for (std::string p; std::getline(ss, p, ',');)
    {
        if (p == "metrics")
            s.metrics = true;
        else if (p == "zf")
            s.zf = true;
        else if (p == "mf")
            s.mf = true;
        else
            throw UsageError("--stats: unknown statistic group '" + p + "' (expected metrics, zf, mf)");
    }
    return s;
}

using EnvLookup = std::function<std::optional<std::string>(const std::string &)>;

inline std::optional<std::string> process_env(const std::string &name)
{
    if (const char *v = std::getenv(name.c_str()))
        return std::string(v);
    return std::nullopt;
}

/// Builds a RunConfig. Precedence: flags > config file > preset > defaults;
/// MIMO_CONVERGE_SEED replaces the default seed.
inline RunConfig parse_config(std::vector<std::string> args, const EnvLookup &env = process_env)
{
    CLI::App app{"Massive MIMO convergence simulator", "mimo_converge"};
    app.allow_config_extras(false);
    app.set_config("--config", "", "Flat key = value file mirroring the flag names");

    std::string preset, mode, K_text, M_text, stats_text, format_text = "csv", output = "-";
    double alpha = kPresetAlpha, rho_f = kPresetRhoF, corr_rho = 0.0, spacing = 1.0;
    PowerProfile profile = preset_profile();
    std::size_t trials = kDefaultTrials;
    std::uint64_t seed = kDefaultSeed;
    unsigned workers = default_workers();
    bool metrics_on_g = false;

    auto *o_preset = app.add_option("--preset", preset, "Figure preset fig1..fig7");
    auto *o_mode = app.add_option("--mode", mode, "fixed-K or fixed-alpha");
    auto *o_K = app.add_option("--K", K_text, "Users: integer (fixed-K) or list/range (fixed-alpha)");
    auto *o_M = app.add_option("--M", M_text, "Antenna sweep list/range (fixed-K)");
    auto *o_alpha = app.add_option("--alpha", alpha, "Antenna ratio M/K (fixed-alpha)");
    auto *o_rho_f = app.add_option("--rho-f", rho_f, "Transmit SNR, linear");
    auto *o_corr = app.add_option("--corr-rho", corr_rho, "Exponential correlation constant in [0,1)");
    auto *o_spacing = app.add_option("--spacing", spacing, "ULA element spacing");
    auto *o_bmin = app.add_option("--beta-min", profile.beta_min, "Smallest link gain");
    auto *o_bmax = app.add_option("--beta-max", profile.beta_max, "Largest link gain");
    auto *o_eta = app.add_option("--eta", profile.eta, "Gain decay constant (does not change the gains)");
    auto *o_stats = app.add_option("--stats", stats_text, "Comma list of metrics,zf,mf");
    auto *o_on_g = app.add_flag("--metrics-on-g", metrics_on_g, "Compute channel metrics on G instead of H");
    app.add_option("--trials", trials, "Trials per sweep point");
    auto *o_seed = app.add_option("--seed", seed, "Base RNG seed");
    app.add_option("--workers", workers, "Worker threads");
    app.add_option("--output", output, "Output path, '-' for stdout");
    app.add_option("--format", format_text, "csv or json");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try
    {
        app.parse(reversed);
    }
    catch (const CLI::CallForHelp &)
    {
        throw HelpRequested(app.help());
    }
    catch (const CLI::ParseError &e)
    {
        throw UsageError(e.what());
    }

    auto given = [](const CLI::Option *o) { return o->count() > 0; };
    auto conflict = [](const std::string &a, const std::string &b) {
        return UsageError(a + " conflicts with " + b);
    };

    RunConfig cfg;
    cfg.output = output;
    if (format_text == "csv")
        cfg.format = OutputFormat::csv;
    else if (format_text == "json")
        cfg.format = OutputFormat::json;
    else
        throw UsageError("--format must be csv or json, got '" + format_text + "'");
    if (workers == 0)
        throw UsageError("--workers must be at least 1");
    cfg.workers = workers;
    if (trials == 0)
        throw UsageError("--trials must be at least 1");

    if (!given(o_seed))
        if (auto e = env("MIMO_CONVERGE_SEED"))
        {
            try
            {
                seed = parse_integer<std::uint64_t>(*e);
            }
            catch (const std::invalid_argument &)
            {
                throw UsageError("MIMO_CONVERGE_SEED is not an unsigned integer: '" + *e + "'");
            }
        }

    if (given(o_preset))
    {
        const std::vector<std::pair<CLI::Option *, std::string>> scenario_keys = {
            {o_mode, "--mode"},         {o_K, "--K"},         {o_M, "--M"},
            {o_alpha, "--alpha"},       {o_rho_f, "--rho-f"}, {o_corr, "--corr-rho"},
            {o_spacing, "--spacing"},   {o_bmin, "--beta-min"}, {o_bmax, "--beta-max"},
            {o_eta, "--eta"},           {o_stats, "--stats"}, {o_on_g, "--metrics-on-g"}};
        for (const auto &[opt, key] : scenario_keys)
            if (given(opt))
                throw conflict("--preset", key);
        try
        {
            cfg.scenarios = preset_scenarios(preset, trials, seed);
        }
        catch (const ConfigError &e)
        {
            throw UsageError(e.what());
        }
        cfg.preset = preset;
        return cfg;
    }

    Scenario s;
    if (given(o_mode))
    {
        if (mode == "fixed-K")
            s.mode = SweepMode::fixed_K;
        else if (mode == "fixed-alpha")
            s.mode = SweepMode::fixed_alpha;
        else
            throw UsageError("--mode must be fixed-K or fixed-alpha, got '" + mode + "'");
    }
    else if (given(o_M) && given(o_alpha))
        throw conflict("--M", "--alpha");
    else
        s.mode = given(o_M) ? SweepMode::fixed_K : SweepMode::fixed_alpha;

    if (!given(o_K))
        throw UsageError("--K is required without --preset");
    if (s.mode == SweepMode::fixed_K)
    {
        if (given(o_alpha))
            throw conflict("--mode fixed-K", "--alpha");
        if (!given(o_M))
            throw UsageError("--mode fixed-K requires --M");
        const auto K = parse_index_list(K_text, "K");
        if (K.size() != 1)
            throw UsageError("--mode fixed-K takes a single --K value");
        s.K = K.front();
        s.sweep = parse_index_list(M_text, "M");
    }
    else
    {
        if (given(o_M))
            throw conflict("--mode fixed-alpha", "--M");
        s.alpha = alpha;
        s.sweep = parse_index_list(K_text, "K");
    }
    s.rho_f = rho_f;
    if (given(o_corr) || given(o_spacing))
        s.correlation = CorrelationSpec{corr_rho, spacing};
    if (given(o_bmin) || given(o_bmax) || given(o_eta))
        s.profile = profile;
    if (given(o_stats))
        s.stats = parse_stats(stats_text);
    s.metrics_on_G = metrics_on_g;
    s.trials = trials;
    s.seed = seed;
    s.validate();
    cfg.scenarios.push_back(std::move(s));
    return cfg;
}

inline RunConfig parse_config(int argc, const char *const *argv, const EnvLookup &env = process_env)
{
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i)
        args.emplace_back(argv[i]);
    return parse_config(std::move(args), env);
}

/// Runs every scenario of the config and flattens the results into output rows.
inline std::vector<OutputRecord> run_config(const RunConfig &cfg)
{
    std::vector<OutputRecord> records;
    for (const auto &s : cfg.scenarios)
    {
        auto r = to_records(run_scenario(s, cfg.workers));
        records.insert(records.end(), r.begin(), r.end());
    }
    return records;
}

} // namespace mimoconv

#endif
