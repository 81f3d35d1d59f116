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
#include "bsplit/numerics.hpp"
#include "bsplit/scheduling.hpp"
#include "bsplit/theory.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace bsplit;

namespace
{
    // P(D(M, a - phi) >= (1 - eps) M^2) for a, phi i.i.d. U[-1, 1]. u = a - phi is triangular on
    // [-2, 2] and D is 1-periodic, so lobes of half-width w at u = 0, +-1, +-2 carry probability
    // (w - w^2/4) + w + w^2/4 = 2 w.
    double single_event_probability(double eps, std::size_t M)
    {
        const double thr = (1.0 - eps) * double(M) * double(M);
        double lo = 0.0, hi = 1.0 / double(M);
        for (int i = 0; i < 200; ++i)
        {
            const double mid = 0.5 * (lo + hi);
            (oracle::direct_array_gain(M, mid) >= thr ? lo : hi) = mid;
        }
        return 2.0 * lo;
    }
}

TEST_SUITE("theory")
{
    TEST_CASE("success bound closed form")
    {
        const double eps = 0.1, W = 510e6, fc = 30e9;
        const std::size_t N = 32, M = 128;
        const double p = std::sqrt(3.0 * eps) / (std::numbers::pi * M * (1.0 + W / (2.0 * fc)));
        CHECK(taylor_event_probability(eps, M, W / 2.0, fc) == doctest::Approx(p).epsilon(1e-15));
        for (double K : {0.0, 100.0, 3000.0, 1e4, 1e5})
        {
            const double ref = std::max(0.0, 1.0 - N * std::pow(1.0 - p, K));
            CHECK(success_probability_bound(eps, N, K, M, W, fc) == doctest::Approx(ref).epsilon(1e-12));
        }
        // monotone in K and tends to one
        double prev = 0.0;
        for (double K = 1000.0; K < 1e6; K *= 1.5)
        {
            const double b = success_probability_bound(eps, N, K, M, W, fc);
            CHECK(b >= prev);
            prev = b;
        }
        CHECK(success_probability_bound(eps, N, 1e7, M, W, fc) == doctest::Approx(1.0));
    }

    TEST_CASE("bound parameter checks")
    {
        CHECK_THROWS_AS(success_probability_bound(0.0, 32, 10, 128, 510e6, 30e9), ParameterError);
        CHECK_THROWS_AS(success_probability_bound(1.0, 32, 10, 128, 510e6, 30e9), ParameterError);
        CHECK_THROWS_AS(success_probability_bound(0.1, 32, 10, 0, 510e6, 30e9), ParameterError);
        CHECK_THROWS_AS(success_probability_bound(0.1, 32, -1.0, 128, 510e6, 30e9), ParameterError);
        CHECK_THROWS_AS(k_min(0.1, 0.0, 32, 128, 510e6, 30e9), ParameterError);
        CHECK_THROWS_AS(k_min(0.1, 1.0, 32, 128, 510e6, 30e9), ParameterError);
    }

    TEST_CASE("k_min is the smallest K meeting the target")
    {
        const double W = 510e6, fc = 30e9;
        CHECK(k_min(0.1, 0.05, 128, 512, W, fc) == 23239);
        CHECK(k_min_real(0.1, 0.05, 128, 512, W, fc) == doctest::Approx(23238.48).epsilon(1e-6));
        CHECK(k_min(0.1, 0.2, 32, 128, W, fc) == 3756);
        for (double delta : {0.01, 0.05, 0.2, 0.5})
            for (std::size_t N : {1u, 32u, 128u})
            {
                const auto k = k_min(0.1, delta, N, 128, W, fc);
                CHECK(success_probability_bound(0.1, N, double(k), 128, W, fc) >= 1.0 - delta);
                if (k > 0)
                    CHECK(success_probability_bound(0.1, N, double(k - 1), 128, W, fc) < 1.0 - delta);
            }
        // decreasing in eps and delta, increasing in N and M
        CHECK(k_min(0.2, 0.05, 32, 128, W, fc) < k_min(0.1, 0.05, 32, 128, W, fc));
        CHECK(k_min(0.1, 0.1, 32, 128, W, fc) < k_min(0.1, 0.05, 32, 128, W, fc));
        CHECK(k_min(0.1, 0.05, 64, 128, W, fc) > k_min(0.1, 0.05, 32, 128, W, fc));
        CHECK(k_min(0.1, 0.05, 32, 256, W, fc) > k_min(0.1, 0.05, 32, 128, W, fc));
    }

    TEST_CASE("single-user single-subcarrier event probability")
    {
        SuccessScenario s;
        s.subcarriers = 1;
        s.users = 1;
        s.elements = 128;
        const double eps = 0.1;
        const std::size_t trials = 400000;
        // small-angle event: |a - phi| <= c has probability c - c^2 / 4
        const double c = std::sqrt(3.0 * eps) / (std::numbers::pi * 128.0);
        const auto taylor = estimate_success_probability(eps, s, trials, 1, EventModel::taylor_sinc);
        CHECK(std::abs(taylor.value - (c - c * c / 4.0)) <= 4.0 * taylor.std_error);
        // first-order expression at f = 0
        CHECK(taylor_event_probability(eps, 128, 0.0, 30e9) == doctest::Approx(c));
        // exact array factor: main lobe plus grating lobes at a - phi = +-1
        const double ref = single_event_probability(eps, 128);
        const auto exact = estimate_success_probability(eps, s, trials, 1, EventModel::exact_array_factor);
        CHECK(std::abs(exact.value - ref) <= 4.0 * exact.std_error);
    }

    TEST_CASE("estimator is worker-independent")
    {
        SuccessScenario s;
        s.users = 300;
        s.subcarriers = 8;
        const auto a = estimate_success_probability(0.1, s, 64, 5, EventModel::exact_array_factor, 1);
        const auto b = estimate_success_probability(0.1, s, 64, 5, EventModel::exact_array_factor, 4);
        CHECK(a.value == b.value);
        CHECK(a.trials == 64);
        CHECK(a.std_error == doctest::Approx(std::sqrt(a.value * (1 - a.value) / 64.0)));
    }

    TEST_CASE("predicted throughput closed form")
    {
        const double K = 5000, rho = 1.6e-17;
        const double snr = rho * 100.0 * 10.0 * 10.0 / (128.0 * 1e-14);
        const double l = std::pow(0.7498 * std::log(K), 1.71);
        const double ref = 510e6 * std::log2(1.0 + snr * 512.0 * 512.0 * l);
        CHECK(predicted_throughput(K, 512, 128, 510e6, rho, 100.0, 10.0, 10.0, 1e-14) ==
              doctest::Approx(ref).epsilon(1e-12));
        CHECK_THROWS_AS(predicted_throughput(1.0, 512, 128, 510e6, rho, 100, 10, 10, 1e-14), DomainError);
        CHECK(predicted_throughput(1e4, 512, 128, 510e6, rho, 100, 10, 10, 1e-14) >
              predicted_throughput(1e3, 512, 128, 510e6, rho, 100, 10, 10, 1e-14));
    }

    TEST_CASE("expected maximum of product-normal powers")
    {
        auto F = [](double z) { return product_normal_cdf(z); };
        for (std::size_t K : {10u, 100u})
        {
            const double ref = oracle::expected_max(K, F, 400.0);
            const auto e = mean_max_product_normal(K, 40000, 3);
            CHECK(std::abs(e.value - ref) <= 4.0 * e.std_error);
        }
        // growth follows the fitted order-statistic law to within 10%
        const double e2 = oracle::expected_max(100, F, 400.0), e3 = oracle::expected_max(1000, F, 400.0),
                     e4 = oracle::expected_max(10000, F, 400.0);
        CHECK(std::abs((e3 / e2) / (lk_approximation(1e3) / lk_approximation(1e2)) - 1.0) <= 0.1);
        CHECK(std::abs((e4 / e3) / (lk_approximation(1e4) / lk_approximation(1e3)) - 1.0) <= 0.1);
        CHECK(mean_max_product_normal(1, 100000, 9).value == doctest::Approx(1.0).epsilon(0.03));
    }

    TEST_CASE("Jensen estimate bounds the campaign average")
    {
        Scenario s;
        s.params.elements = 64;
        s.params.subcarriers = 16;
        s.users = 50;
        const auto c = run_campaign(s, SchedulerKind::max_rate, 60, 17, 1);
        const auto j = jensen_throughput(s, 60, 17, 1);
        CHECK(j.throughput_bps >= c.throughput_bps);
        for (std::size_t n = 0; n < 16; ++n)
            CHECK(j.mean_max_gain[n] == doctest::Approx(c.mean_gain[n]).epsilon(1e-12));
    }
}
