// SPDX-License-Identifier: Apache-2.0
//
// bsplit: beam-split aware IRS/OFDMA downlink simulator
// Copyright (C) 2026 The bsplit authors
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

#include "bsplit/errors.hpp"
#include "bsplit/experiments.hpp"

#include <doctest.h>

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace bsplit;

namespace
{
    Scenario small_scenario()
    {
        Scenario s;
        s.params.elements = 32;
        s.params.subcarriers = 8;
        s.users = 20;
        s.slots = 12;
        return s;
    }

    std::size_t count_lines(const std::string &s)
    {
        std::size_t n = 0;
        for (char c : s)
            n += c == '\n';
        return n;
    }
}

TEST_SUITE("experiments")
{
    TEST_CASE("number formatting round-trips")
    {
        for (double v : {0.0, 1.0, -2.5, 0.1, 1.0 / 3.0, 6.02214076e23, 5e-324, 253007812.5})
        {
            const auto t = format_number(v);
            double back = -1.0;
            std::from_chars(t.data(), t.data() + t.size(), back);
            CHECK(back == v);
        }
        CHECK(format_number(3.0) == "3");
        CHECK(format_number(std::nan("")) == "nan");
    }

    TEST_CASE("csv long format")
    {
        ExperimentResult r;
        r.key_names = {"K"};
        r.add(ScenarioLabel::maxrate_fading, {10}, "se", 1.5, 0.25);
        CHECK(to_csv(r) == "scenario,K,metric,value,stderr\nmaxrate-fading,10,se,1.5,0.25\n");
        r.rows.push_back({"x", {1, 2}, "m", 0, 0});
        CHECK_THROWS_AS(to_csv(r), DimensionError);
        CHECK(r.select(ScenarioLabel::maxrate_fading, "se").size() == 1);
        CHECK(r.select(ScenarioLabel::rr_optimal, "se").empty());
    }

    TEST_CASE("slope fit")
    {
        std::vector<double> m{32, 64, 128, 256}, y;
        for (double x : m)
            y.push_back(2.0 * std::log2(x) + 1.0);
        const auto f = fit_log2_slope(m, y);
        CHECK(f.slope == doctest::Approx(2.0));
        CHECK(f.intercept == doctest::Approx(1.0));
        CHECK_THROWS_AS(fit_log2_slope(std::vector<double>{4}, std::vector<double>{1}), DimensionError);
    }

    TEST_CASE("beam-split sweep: peak at the tuned frequency, exact vs sinc")
    {
        SystemParams p;
        const std::vector<std::size_t> ms{64, 256};
        const auto r = exp_beam_split(ms, p, 0.0, 401);
        CHECK(r.rows.size() == 2 * 128 * 3);
        for (const auto &row : r.select(ScenarioLabel::rr_optimal, "gain_flat"))
            CHECK(row.value == row.keys[0] * row.keys[0]);
        // averaged gain decreases away from the tuned frequency
        const auto ex = r.select(ScenarioLabel::rr_optimal, "gain_exact");
        const auto sc = r.select(ScenarioLabel::rr_optimal, "gain_sinc");
        for (std::size_t i = 0; i < ex.size(); ++i)
        {
            CHECK(ex[i].value <= ex[i].keys[0] * ex[i].keys[0]);
            CHECK(std::abs(ex[i].value - sc[i].value) <= 1e-3 * ex[i].keys[0] * ex[i].keys[0]);
        }
        CHECK(ex[63].value > ex[0].value);     // M = 64, centre vs edge
        CHECK(ex[128 + 63].value > ex[128].value);
    }

    TEST_CASE("avg-gain and se sweeps produce complete tables")
    {
        const auto s = small_scenario();
        const auto g = exp_avg_gain(s);
        CHECK(g.rows.size() == 3 * 8);
        CHECK(count_lines(to_csv(g)) == 1 + 3 * 8);

        const std::vector<std::size_t> ks{1, 5};
        const auto u = exp_se_vs_users(ks, s);
        CHECK(u.select(ScenarioLabel::maxrate_fading, "se").size() == 2);
        CHECK(u.select(ScenarioLabel::maxrate_fading, "se_theory").size() == 1);
        CHECK(u.select(ScenarioLabel::maxrate_nofading, "se_plateau").size() == 2);
        for (const auto &row : u.select(ScenarioLabel::maxrate_fading, "se_jensen"))
        {
            const auto se = u.select(ScenarioLabel::maxrate_fading, "se");
            for (const auto &sr : se)
                if (sr.keys == row.keys)
                    CHECK(row.value >= sr.value);
        }

        const std::vector<std::size_t> ms{16, 32, 64};
        const auto e = exp_se_vs_elements(ms, s);
        CHECK(e.select(ScenarioLabel::rr_optimal, "slope").size() == 1);
        CHECK(e.parameters.at("slope_points") == "2");
        CHECK_THROWS_AS(exp_se_vs_elements(std::vector<std::size_t>{16}, s), ConfigError);
    }

    TEST_CASE("theorem1 sweep adds k_min when delta is given")
    {
        SuccessScenario b;
        b.subcarriers = 4;
        b.elements = 16;
        const std::vector<std::size_t> ks{50};
        const auto r = exp_theorem1(0.3, ks, b, 20, 1, 0.2);
        const auto km = r.select(ScenarioLabel::maxrate_nofading, "k_min");
        REQUIRE(km.size() == 1);
        CHECK(km[0].value == double(k_min(0.3, 0.2, 4, 16, b.bandwidth_hz, b.carrier_hz)));
        CHECK(r.select(ScenarioLabel::maxrate_nofading, "bound").size() == 2);
    }

    TEST_CASE("config parse, apply, dump round-trip")
    {
        const auto m = parse_config_text("# comment\nusers = 42\n  elements=64 # trailing\n\nfading = off\n"
                                         "power_dbm = 30\nangle_mode = geometric\nscheduler = round-robin\n");
        Scenario s;
        apply_config(s, m);
        CHECK(s.users == 42);
        CHECK(s.params.elements == 64);
        CHECK_FALSE(s.fading);
        CHECK(s.params.power_w == doctest::Approx(1.0));
        CHECK(s.geometry.angle_mode == AngleMode::geometric);
        CHECK(s.scheduler == SchedulerKind::round_robin);

        Scenario t;
        apply_config(t, parse_config_text(config_to_text(scenario_to_config(s))));
        CHECK(scenario_to_config(t) == scenario_to_config(s));
        CHECK(t.params.power_w == s.params.power_w);

        CHECK_THROWS_AS(parse_config_text("nonsense line\n"), ConfigError);
        Scenario u;
        CHECK_THROWS_AS(apply_config(u, parse_config_text("no_such_key = 1\n")), ConfigError);
        CHECK_THROWS_AS(apply_config(u, parse_config_text("users = -3\n")), ConfigError);
        CHECK_THROWS_AS(apply_config(u, parse_config_text("elements = 0\n")), ConfigError);
        CHECK_THROWS_AS(apply_config(u, parse_config_text("fading = maybe\n")), ConfigError);
    }

    TEST_CASE("sweeps are byte-identical across worker counts")
    {
        const auto s = small_scenario();
        const std::vector<std::size_t> ks{3, 9};
        CHECK(to_csv(exp_se_vs_users(ks, s, 1)) == to_csv(exp_se_vs_users(ks, s, 8)));
        CHECK(to_csv(exp_avg_gain(s, 1)) == to_csv(exp_avg_gain(s, 8)));
    }
}
