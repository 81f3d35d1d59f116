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

#include "oracles.hpp"

#include "bsplit/errors.hpp"
#include "bsplit/scheduling.hpp"

#include <doctest.h>

#include <cmath>

using namespace bsplit;

TEST_SUITE("scheduling")
{
    TEST_CASE("gain matrix layout")
    {
        GainMatrix g(3, 4, 1.5);
        CHECK(g.users() == 3);
        CHECK(g.subcarriers() == 4);
        g(2, 1) = 7.0;
        CHECK(g.row(2)[1] == 7.0);
        CHECK(g(0, 0) == 1.5);
        CHECK_THROWS_AS(GainMatrix(0, 4), DimensionError);
        CHECK_THROWS_AS(GainMatrix(4, 0), DimensionError);
    }

    TEST_CASE("max-rate picks the per-subcarrier argmax, ties to lowest index")
    {
        GainMatrix g(3, 3);
        g(0, 0) = 1, g(1, 0) = 5, g(2, 0) = 2;
        g(0, 1) = 4, g(1, 1) = 4, g(2, 1) = 1;
        g(0, 2) = 0, g(1, 2) = 0, g(2, 2) = 9;
        const auto d = schedule_max_rate(g, 3);
        CHECK(d.slot == 3);
        CHECK(d.assignment == std::vector<std::size_t>{1, 0, 2});
    }

    TEST_CASE("max-rate is optimal over all assignments")
    {
        SystemParams p;
        Rng rng(2024);
        auto rate = [&](double x) { return subcarrier_rate(x, p); };
        for (int inst = 0; inst < 200; ++inst)
        {
            const std::size_t K = 1 + inst % 4, N = 1 + (inst / 4) % 4;
            p.subcarriers = N;
            GainMatrix g(K, N);
            std::vector<std::vector<double>> raw(K, std::vector<double>(N));
            for (std::size_t k = 0; k < K; ++k)
                for (std::size_t n = 0; n < N; ++n)
                    raw[k][n] = g(k, n) = rng.exponential() * 1e-10;
            const double best = oracle::best_assignment(raw, rate);
            const double got = slot_throughput(g, schedule_max_rate(g), p);
            CHECK(got == doctest::Approx(best).epsilon(1e-12));
        }
    }

    TEST_CASE("round robin cycles through users")
    {
        for (std::size_t t = 0; t < 10; ++t)
        {
            const auto d = schedule_round_robin(4, 3, t);
            for (auto u : d.assignment)
                CHECK(u == t % 4);
        }
        CHECK_THROWS_AS(schedule_round_robin(0, 3, 0), DimensionError);
    }

    TEST_CASE("rate formula and dimension checks")
    {
        SystemParams p;
        const double g = 3e-12;
        const double snr = p.power_w / (double(p.subcarriers) * p.noise_w) * g;
        CHECK(subcarrier_rate(g, p) == doctest::Approx(p.subcarrier_spacing() * std::log2(1.0 + snr)));
        CHECK(subcarrier_rate(0.0, p) == 0.0);
        GainMatrix m(2, 5);
        ScheduleDecision bad{{0, 1}, 0};
        CHECK_THROWS_AS(slot_throughput(m, bad, p), DimensionError);
        ScheduleDecision oob{{0, 1, 2, 0, 0}, 0};
        CHECK_THROWS_AS(slot_throughput(m, oob, p), DimensionError);
    }

    TEST_CASE("campaign is reproducible and worker-independent")
    {
        Scenario s;
        s.params.elements = 64;
        s.params.subcarriers = 16;
        s.users = 30;
        const auto a = run_campaign(s, SchedulerKind::max_rate, 40, 7, 1);
        const auto b = run_campaign(s, SchedulerKind::max_rate, 40, 7, 3);
        CHECK(a.throughput_bps == b.throughput_bps);
        CHECK(a.se_stderr == b.se_stderr);
        CHECK(a.mean_gain == b.mean_gain);
        const auto c = run_campaign(s, SchedulerKind::max_rate, 40, 8, 1);
        CHECK(a.throughput_bps != c.throughput_bps);
        CHECK(a.se == doctest::Approx(a.throughput_bps / s.params.bandwidth_hz));
    }

    TEST_CASE("round robin with optimal tuning reaches M^2 at the tuned subcarrier")
    {
        Scenario s;
        s.params.elements = 128;
        s.params.subcarriers = 8;
        s.users = 5;
        s.fading = false;
        s.common_distance_m = 700.0;
        s.rr_tuning_hz = subcarrier_frequency(3, s.params);
        const auto out = simulate_slot(s, SchedulerKind::round_robin, 2, 11);
        const double g0 = s.reference_pathloss() * s.params.gain_tx * s.params.gain_rx;
        CHECK(out.scheduled_gain[2] == doctest::Approx(g0 * 128.0 * 128.0).epsilon(1e-12));
        for (double g : out.scheduled_gain)
            CHECK(g <= g0 * 128.0 * 128.0 * (1.0 + 1e-12));
    }

    TEST_CASE("max-rate gain grows with K in matched slots")
    {
        Scenario s;
        s.params.elements = 64;
        s.params.subcarriers = 8;
        s.fading = true;
        double prev = 0.0;
        for (std::size_t K : {1u, 4u, 16u, 64u})
        {
            s.users = K;
            // common random numbers: a larger K sees a superset of users
            const auto o = simulate_slot(s, SchedulerKind::max_rate, 0, 99);
            double sum = 0.0;
            for (double g : o.scheduled_gain)
                sum += g;
            CHECK(sum >= prev);
            prev = sum;
        }
    }
}
