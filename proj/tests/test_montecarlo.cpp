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

#include "mimoconv/montecarlo.hpp"

#include <cmath>

using namespace mimoconv;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

Scenario small_alpha_scenario()
{
    Scenario s;
    s.mode = SweepMode::fixed_alpha;
    s.alpha = 4.0;
    s.sweep = {2, 3, 5};
    s.trials = 40;
    s.seed = 9;
    s.profile = PowerProfile{0.1, 1.0, 0.5};
    s.correlation = CorrelationSpec{0.5, 1.0};
    return s;
}

bool same_result(const SweepResult &a, const SweepResult &b)
{
    if (a.points.size() != b.points.size())
        return false;
    for (std::size_t p = 0; p < a.points.size(); ++p)
    {
        const auto &x = a.points[p], &y = b.points[p];
        if (x.stats.size() != y.stats.size() || x.degenerate_trials != y.degenerate_trials)
            return false;
        for (std::size_t i = 0; i < x.stats.size(); ++i)
        {
            const auto &s = x.stats[i], &t = y.stats[i];
            if (s.name != t.name || s.mean != t.mean || s.std_dev != t.std_dev || s.std_error != t.std_error ||
                s.trials != t.trials || s.limit != t.limit)
                return false;
        }
    }
    return true;
}

} // namespace

TEST_CASE("summarize")
{
    const auto s = summarize("x", {1.0, 2.0, 3.0, 4.0});
    CHECK(s.mean == 2.5);
    CHECK_THAT(s.std_dev, WithinRel(std::sqrt(5.0 / 3.0), 1e-15));
    CHECK_THAT(s.std_error, WithinRel(s.std_dev / 2.0, 1e-15));
    CHECK(s.trials == 4);
    const auto inf = summarize("y", {1.0, std::numeric_limits<double>::infinity()});
    CHECK(std::isinf(inf.mean));
    CHECK(std::isnan(inf.std_dev));
}

TEST_CASE("Scenario points and validation")
{
    auto s = small_alpha_scenario();
    const auto pts = s.points();
    REQUIRE(pts.size() == 3);
    CHECK(pts[1].M == 12);
    CHECK(pts[1].K == 3);

    s.alpha = 2.5;
    CHECK_THROWS_AS(s.validate(), ConfigError); // 2.5 * 3 is not an integer

    Scenario k;
    k.mode = SweepMode::fixed_K;
    k.K = 10;
    k.sweep = {5, 20};
    CHECK_THROWS_AS(k.validate(), ConfigError); // ZF with M <= K
    k.stats = {true, false, true};
    CHECK_NOTHROW(k.validate());
    k.sweep = {20, 20};
    CHECK_THROWS_AS(k.validate(), ConfigError);
    k.sweep = {20};
    k.trials = 0;
    CHECK_THROWS_AS(k.validate(), ConfigError);
}

TEST_CASE("run_scenario is deterministic and independent of worker count")
{
    auto s = small_alpha_scenario();
    s.trials = 1;
    CHECK(same_result(run_scenario(s, 1), run_scenario(s, 1)));

    s.trials = 37;
    const auto serial = run_scenario(s, 1);
    const auto parallel = run_scenario(s, 4);
    CHECK(same_result(serial, parallel));
    s.seed = 10;
    CHECK_FALSE(same_result(serial, run_scenario(s, 4)));
}

TEST_CASE("run_scenario layout and limits")
{
    const auto s = small_alpha_scenario();
    const auto r = run_scenario(s, 2);
    REQUIRE(r.points.size() == 3);
    const auto &p = r.points[0]; // K = 2
    std::vector<std::string> names;
    for (const auto &st : p.stats)
        names.push_back(st.name);
    CHECK(names == std::vector<std::string>{"mad", "lambda_ratio", "diagonal_dominance", "zf_snr", "mf_sinr_mean",
                                            "mf_sinr_user_1", "mf_sinr_user_2"});
    CHECK_FALSE(p.find("mad")->limit);
    const auto mom = limiting_moments(*s.profile);
    CHECK_THAT(*p.find("zf_snr")->limit, WithinRel(3.0 / mom.mean_inv_beta, 1e-15));
    const auto beta = link_gains(2, *s.profile);
    CHECK_THAT(*p.find("mf_sinr_user_2")->limit, WithinRel(mf_sinr_limit({1.0, 4.0}, beta[1], mom.mean_beta), 1e-15));
    for (const auto &st : p.stats)
        CHECK(st.trials == s.trials);
}

TEST_CASE("singular samples that survive the retry abort the run")
{
    Scenario s;
    s.mode = SweepMode::fixed_K;
    s.K = 4;
    s.sweep = {2};
    s.stats = {true, false, false};
    s.trials = 3;
    CHECK_THROWS_AS(run_scenario(s, 1), SingularMatrixError);
}

TEST_CASE("fixed-K mean lambda ratio decreases toward 1")
{
    Scenario s;
    s.mode = SweepMode::fixed_K;
    s.K = 10;
    s.sweep = {20, 50, 100, 500, 2000, 10000};
    s.stats = {true, false, false};
    s.trials = 40;
    const auto r = run_scenario(s, 2);
    double prev = 1e300;
    for (const auto &p : r.points)
    {
        const double m = p.find("lambda_ratio")->mean;
        CHECK(m < prev);
        CHECK(m > 1.0);
        prev = m;
    }
    CHECK(prev < 1.3);
}

TEST_CASE("standard error halves when trials quadruple")
{
    Scenario s;
    s.mode = SweepMode::fixed_alpha;
    s.alpha = 10.0;
    s.sweep = {4};
    s.stats = {false, true, true};
    s.trials = 500;
    const double se1 = run_scenario(s, 2).points[0].find("zf_snr")->std_error;
    s.trials = 2000;
    const double se4 = run_scenario(s, 2).points[0].find("zf_snr")->std_error;
    CHECK_THAT(se1 / se4, WithinRel(2.0, 0.20));
}

TEST_CASE("compare_to_limit")
{
    SweepResult r;
    PointResult p;
    p.point = {100, 10, 10.0};
    StatSummary at;
    at.name = "zf_snr";
    at.mean = 9.0;
    at.limit = 9.0;
    StatSummary off;
    off.name = "mf_sinr_mean";
    off.mean = 5.5;
    off.limit = 5.0;
    StatSummary none;
    none.name = "mad";
    p.stats = {at, off, none};
    r.points.push_back(p);
    const auto gaps = compare_to_limit(r);
    REQUIRE(gaps.size() == 2);
    CHECK(gaps[0].gap == 0.0);
    CHECK_THAT(gaps[1].gap, WithinRel(0.1, 1e-14));
}
