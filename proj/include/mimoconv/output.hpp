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

#ifndef MIMOCONV_OUTPUT_HPP
#define MIMOCONV_OUTPUT_HPP

#include "montecarlo.hpp"

#include <json.hpp>

#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <system_error>
#include <vector>

namespace mimoconv {

class OutputError : public std::runtime_error {
public:
    explicit OutputError(const std::string &what) : std::runtime_error(what) {}
};

/// One row per (sweep point, statistic); every row carries the full configuration.
struct OutputRecord {
    std::string mode;
    std::int64_t M = 0;
    std::int64_t K = 0;
    double alpha = 0.0;
    std::string statistic;
    double mean = 0.0;
    double std_dev = 0.0;
    double std_error = 0.0;
    std::uint64_t trials = 0;
    std::optional<double> limit;
    std::uint64_t seed = 0;
    double rho_f = 1.0;
    double corr_rho = 0.0;
    double spacing = 1.0;
    double beta_min = 1.0;
    double beta_max = 1.0;
    std::optional<double> eta;
    std::uint64_t degenerate_trials = 0;

    bool operator==(const OutputRecord &) const = default;
};

inline const std::vector<std::string> &csv_columns()
{
    static const std::vector<std::string> cols = {
        "mode",   "M",    "K",       "alpha",   "statistic", "mean",     "std",      "stderr",   "trials",
        "limit",  "seed", "rho_f",   "corr_rho", "spacing",  "beta_min", "beta_max", "eta",      "degenerate_trials"};
    return cols;
}

inline std::vector<OutputRecord> to_records(const SweepResult &result)
{
    const Scenario &sc = result.scenario;
    std::vector<OutputRecord> out;
    for (const auto &p : result.points)
        for (const auto &s : p.stats)
        {
            OutputRecord r;
            r.mode = to_string(sc.mode);
            r.M = p.point.M;
            r.K = p.point.K;
            r.alpha = p.point.alpha;
            r.statistic = s.name;
            r.mean = s.mean;
            r.std_dev = s.std_dev;
            r.std_error = s.std_error;
            r.trials = s.trials;
            r.limit = s.limit;
            r.seed = sc.seed;
            r.rho_f = sc.rho_f;
            if (sc.correlation)
            {
                r.corr_rho = sc.correlation->rho;
                r.spacing = sc.correlation->spacing;
            }
            if (sc.profile)
            {
                r.beta_min = sc.profile->beta_min;
                r.beta_max = sc.profile->beta_max;
                r.eta = sc.profile->eta;
            }
            r.degenerate_trials = p.degenerate_trials;
            out.push_back(std::move(r));
        }
    return out;
}

/// 17 significant digits (round-trips exactly); "inf", "-inf", "nan" otherwise.
inline std::string format_number(double v)
{
    if (std::isnan(v))
        return "nan";
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

inline double parse_number(const std::string &s)
{
    if (s == "nan")
        return std::numeric_limits<double>::quiet_NaN();
    if (s == "inf")
        return std::numeric_limits<double>::infinity();
    if (s == "-inf")
        return -std::numeric_limits<double>::infinity();
    double v = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size())
        throw std::invalid_argument("not a number: '" + s + "'");
    return v;
}

template <typename Int>
Int parse_integer(const std::string &s)
{
    Int v{};
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size())
        throw std::invalid_argument("not an integer: '" + s + "'");
    return v;
}

inline void write_csv(std::ostream &os, const std::vector<OutputRecord> &records)
{
    const auto &cols = csv_columns();
    for (std::size_t i = 0; i < cols.size(); ++i)
        os << (i ? "," : "") << cols[i];
    os << '\n';
    auto opt = [](const std::optional<double> &v) { return v ? format_number(*v) : std::string(); };
    for (const auto &r : records)
    {
        os << r.mode << ',' << r.M << ',' << r.K << ',' << format_number(r.alpha) << ',' << r.statistic << ','
           << format_number(r.mean) << ',' << format_number(r.std_dev) << ',' << format_number(r.std_error) << ','
           << r.trials << ',' << opt(r.limit) << ',' << r.seed << ',' << format_number(r.rho_f) << ','
           << format_number(r.corr_rho) << ',' << format_number(r.spacing) << ',' << format_number(r.beta_min) << ','
           << format_number(r.beta_max) << ',' << opt(r.eta) << ',' << r.degenerate_trials << '\n';
    }
}

inline std::vector<OutputRecord> read_csv(std::istream &is)
{
    std::string line;
    if (!std::getline(is, line))
        throw std::invalid_argument("read_csv: missing header");
    std::vector<std::string> header;
    {
        std::stringstream ss(line);
        for (std::string cell; std::getline(ss, cell, ',');)
            header.push_back(cell);
    }
    if (header != csv_columns())
        throw std::invalid_argument("read_csv: unexpected header");

    std::vector<OutputRecord> out;
    while (std::getline(is, line))
    {
        if (line.empty())
            continue;
        std::vector<std::string> c;
        std::size_t start = 0;
        for (;;)
        {
            const auto comma = line.find(',', start);
            c.push_back(line.substr(start, comma - start));
            if (comma == std::string::npos)
                break;
            start = comma + 1;
        }
        if (c.size() != header.size())
            throw std::invalid_argument("read_csv: wrong column count in '" + line + "'");
        auto opt = [](const std::string &s) { return s.empty() ? std::optional<double>() : parse_number(s); };
        OutputRecord r;
        r.mode = c[0];
        r.M = parse_integer<std::int64_t>(c[1]);
        r.K = parse_integer<std::int64_t>(c[2]);
        r.alpha = parse_number(c[3]);
        r.statistic = c[4];
        r.mean = parse_number(c[5]);
        r.std_dev = parse_number(c[6]);
        r.std_error = parse_number(c[7]);
        r.trials = parse_integer<std::uint64_t>(c[8]);
        r.limit = opt(c[9]);
        r.seed = parse_integer<std::uint64_t>(c[10]);
        r.rho_f = parse_number(c[11]);
        r.corr_rho = parse_number(c[12]);
        r.spacing = parse_number(c[13]);
        r.beta_min = parse_number(c[14]);
        r.beta_max = parse_number(c[15]);
        r.eta = opt(c[16]);
        r.degenerate_trials = parse_integer<std::uint64_t>(c[17]);
        out.push_back(std::move(r));
    }
    return out;
}

namespace detail {

// JSON has no inf/nan; those are written as the strings used in CSV.
inline nlohmann::json json_number(double v)
{
    if (std::isfinite(v))
        return v;
    return format_number(v);
}

inline double json_to_double(const nlohmann::json &j)
{
    return j.is_string() ? parse_number(j.get<std::string>()) : j.get<double>();
}

inline nlohmann::json json_optional(const std::optional<double> &v)
{
    return v ? json_number(*v) : nlohmann::json(nullptr);
}

inline std::optional<double> json_to_optional(const nlohmann::json &j)
{
    return j.is_null() ? std::optional<double>() : json_to_double(j);
}

} // namespace detail

inline nlohmann::json to_json(const std::vector<OutputRecord> &records)
{
    using detail::json_number;
    using detail::json_optional;
    nlohmann::json arr = nlohmann::json::array();
    for (const auto &r : records)
    {
        arr.push_back({{"mode", r.mode},
                       {"M", r.M},
                       {"K", r.K},
                       {"alpha", json_number(r.alpha)},
                       {"statistic", r.statistic},
                       {"mean", json_number(r.mean)},
                       {"std", json_number(r.std_dev)},
                       {"stderr", json_number(r.std_error)},
                       {"trials", r.trials},
                       {"limit", json_optional(r.limit)},
                       {"seed", r.seed},
                       {"rho_f", json_number(r.rho_f)},
                       {"corr_rho", json_number(r.corr_rho)},
                       {"spacing", json_number(r.spacing)},
                       {"beta_min", json_number(r.beta_min)},
                       {"beta_max", json_number(r.beta_max)},
                       {"eta", json_optional(r.eta)},
                       {"degenerate_trials", r.degenerate_trials}});
    }
    return {{"records", arr}};
}

inline std::vector<OutputRecord> from_json(const nlohmann::json &doc)
{
    using detail::json_to_double;
    using detail::json_to_optional;
    std::vector<OutputRecord> out;
    for (const auto &o : doc.at("records"))
    {
        OutputRecord r;
        r.mode = o.at("mode").get<std::string>();
        r.M = o.at("M").get<std::int64_t>();
        r.K = o.at("K").get<std::int64_t>();
        r.alpha = json_to_double(o.at("alpha"));
        r.statistic = o.at("statistic").get<std::string>();
        r.mean = json_to_double(o.at("mean"));
        r.std_dev = json_to_double(o.at("std"));
        r.std_error = json_to_double(o.at("stderr"));
        r.trials = o.at("trials").get<std::uint64_t>();
        r.limit = json_to_optional(o.at("limit"));
        r.seed = o.at("seed").get<std::uint64_t>();
        r.rho_f = json_to_double(o.at("rho_f"));
        r.corr_rho = json_to_double(o.at("corr_rho"));
        r.spacing = json_to_double(o.at("spacing"));
        r.beta_min = json_to_double(o.at("beta_min"));
        r.beta_max = json_to_double(o.at("beta_max"));
        r.eta = json_to_optional(o.at("eta"));
        r.degenerate_trials = o.at("degenerate_trials").get<std::uint64_t>();
        out.push_back(std::move(r));
    }
    return out;
}

enum class OutputFormat { csv, json };

inline void write_records(std::ostream &os, const std::vector<OutputRecord> &records, OutputFormat format)
{
    if (format == OutputFormat::csv)
        write_csv(os, records);
    else
        os << to_json(records).dump(2) << '\n';
}

/// Writes to `path`, or to `fallback` when path is "-".
inline void emit(const std::vector<OutputRecord> &records, OutputFormat format, const std::string &path,
                 std::ostream &fallback)
{
    if (path == "-")
    {
        write_records(fallback, records, format);
        return;
    }
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file)
        throw OutputError("cannot open output file '" + path + "'");
    write_records(file, records, format);
    file.flush();
    if (!file)
        throw OutputError("write failed for output file '" + path + "'");
}

} // namespace mimoconv

#endif
