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

#include "bsplit/theory.hpp"
#include "bsplit/channel.hpp"
#include "bsplit/errors.hpp"
#include "bsplit/numerics.hpp"
#include "bsplit/parallel.hpp"
#include "bsplit/rng.hpp"
#include "bsplit/scheduling.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace bsplit
{
    namespace
    {
        void check_fraction(double v, const char *name)
        {
            if (!(v > 0.0 && v < 1.0))
                throw ParameterError(std::string(name) + " must lie in (0, 1)");
        }

        // sqrt(3 eps) / (pi M (1 + W / (2 fc))), the worst case over the band.
        double worst_event_probability(double epsilon, std::size_t elements, double bandwidth_hz, double carrier_hz)
        {
            check_fraction(epsilon, "epsilon");
            if (elements == 0)
                throw ParameterError("element count must be >= 1");
            const double p = taylor_event_probability(epsilon, elements, 0.5 * bandwidth_hz, carrier_hz);
            if (!(p < 1.0))
                throw ParameterError("small-angle regime violated: sqrt(3 eps) / (pi M (1 + W/2fc)) >= 1");
            return p;
        }
    }

    double taylor_event_probability(double epsilon, std::size_t elements, double f_hz, double carrier_hz)
    {
        return std::sqrt(3.0 * epsilon) /
               (std::numbers::pi * static_cast<double>(elements) * (1.0 + f_hz / carrier_hz));
    }

    double success_probability_bound(double epsilon, std::size_t subcarriers, double users, std::size_t elements,
                                     double bandwidth_hz, double carrier_hz)
    {
        const double p = worst_event_probability(epsilon, elements, bandwidth_hz, carrier_hz);
        if (users < 0.0)
            throw ParameterError("user count cannot be negative");
        const double miss_all = std::exp(users * std::log1p(-p));
        return std::clamp(1.0 - static_cast<double>(subcarriers) * miss_all, 0.0, 1.0);
    }

    Estimate estimate_success_probability(double epsilon, const SuccessScenario &scenario, std::size_t trials,
                                          std::uint64_t seed, EventModel model, unsigned workers)
    {
        check_fraction(epsilon, "epsilon");
        if (trials == 0)
            throw ConfigError("trial count must be >= 1");
        if (scenario.users == 0 || scenario.subcarriers == 0 || scenario.elements == 0)
            throw ConfigError("success scenario needs users, subcarriers and elements");

        SystemParams grid_params;
        grid_params.bandwidth_hz = scenario.bandwidth_hz;
        grid_params.carrier_hz = scenario.carrier_hz;
        grid_params.subcarriers = scenario.subcarriers;
        const auto grid = subcarrier_grid(grid_params);

        const std::size_t M = scenario.elements;
        const double m2 = static_cast<double>(M) * static_cast<double>(M);
        const double gain_threshold = (1.0 - epsilon) * m2;
        const double taylor_half_width = std::sqrt(3.0 * epsilon) / (std::numbers::pi * static_cast<double>(M));

        const auto hits = parallel_map(trials, workers, [&](std::size_t trial) -> int
        {
            Rng rng(derive_seed(seed, Stream::theorem1, trial));
            const double a = rng.uniform(-1.0, 1.0);
            std::vector<double> phi(scenario.users);
            for (auto &p : phi)
                p = rng.uniform(-1.0, 1.0);

            for (double f : grid)
            {
                const double s = 1.0 + f / scenario.carrier_hz;
                bool covered = false;
                for (double p : phi)
                {
                    const double delta = a - s * p;
                    covered = model == EventModel::exact_array_factor ? dirichlet_gain(M, delta) >= gain_threshold
                                                                      : std::abs(delta) <= taylor_half_width;
                    if (covered)
                        break;
                }
                if (!covered)
                    return 0;
            }
            return 1;
        });

        std::size_t success = 0;
        for (int h : hits)
            success += static_cast<std::size_t>(h);
        Estimate e;
        e.trials = trials;
        e.value = static_cast<double>(success) / static_cast<double>(trials);
        e.std_error = std::sqrt(e.value * (1.0 - e.value) / static_cast<double>(trials));
        return e;
    }

    double k_min_real(double epsilon, double delta, std::size_t subcarriers, std::size_t elements,
                      double bandwidth_hz, double carrier_hz)
    {
        check_fraction(delta, "delta");
        if (subcarriers == 0)
            throw ParameterError("subcarrier count must be >= 1");
        const double p = worst_event_probability(epsilon, elements, bandwidth_hz, carrier_hz);
        return -std::log(static_cast<double>(subcarriers) / delta) / std::log1p(-p);
    }

    std::uint64_t k_min(double epsilon, double delta, std::size_t subcarriers, std::size_t elements,
                        double bandwidth_hz, double carrier_hz)
    {
        const double k = k_min_real(epsilon, delta, subcarriers, elements, bandwidth_hz, carrier_hz);
        return static_cast<std::uint64_t>(std::ceil(std::max(k, 0.0)));
    }

    double predicted_throughput(double users, std::size_t elements, std::size_t subcarriers, double bandwidth_hz,
                                double rho, double gain_tx, double gain_rx, double power_w, double noise_w)
    {
        if (!(users >= 2.0))
            throw DomainError("predicted_throughput: K must be >= 2");
        if (elements == 0 || subcarriers == 0 || !(bandwidth_hz > 0.0) || !(rho > 0.0) || !(gain_tx > 0.0) ||
            !(gain_rx > 0.0) || !(power_w > 0.0) || !(noise_w > 0.0))
            throw ParameterError("predicted_throughput: all parameters must be positive");
        const double m = static_cast<double>(elements);
        const double snr = rho * gain_tx * gain_rx * power_w / (static_cast<double>(subcarriers) * noise_w);
        return bandwidth_hz * std::log2(1.0 + snr * m * m * lk_approximation(users));
    }

    JensenResult jensen_throughput(const Scenario &scenario, std::size_t trials, std::uint64_t seed, unsigned workers)
    {
        scenario.validate();
        if (trials == 0)
            throw ConfigError("trial count must be >= 1");
        const auto slots = parallel_map(trials, workers, [&](std::size_t t)
                                        { return simulate_slot(scenario, SchedulerKind::max_rate, t, seed).scheduled_gain; });

        const SystemParams &params = scenario.params;
        JensenResult r;
        r.mean_max_gain.assign(params.subcarriers, 0.0);
        for (const auto &g : slots)
            for (std::size_t n = 0; n < params.subcarriers; ++n)
                r.mean_max_gain[n] += g[n];
        for (auto &g : r.mean_max_gain)
        {
            g /= static_cast<double>(trials);
            r.throughput_bps += subcarrier_rate(g, params);
        }
        return r;
    }

    Estimate mean_max_product_normal(std::size_t users, std::size_t trials, std::uint64_t seed, unsigned workers)
    {
        if (users == 0 || trials == 0)
            throw ConfigError("users and trials must be >= 1");
        // |x|^2 and |y|^2 are independent unit exponentials for standard complex normals.
        const auto maxima = parallel_map(trials, workers, [&](std::size_t t)
        {
            Rng rng(derive_seed(seed, Stream::order_statistic, t));
            double best = 0.0;
            for (std::size_t k = 0; k < users; ++k)
                best = std::max(best, rng.exponential() * rng.exponential());
            return best;
        });
        double sum = 0.0, sum_sq = 0.0;
        for (double v : maxima)
        {
            sum += v;
            sum_sq += v * v;
        }
        const double n = static_cast<double>(trials);
        Estimate e;
        e.trials = trials;
        e.value = sum / n;
        e.std_error = trials > 1 ? std::sqrt(std::max(0.0, (sum_sq - n * e.value * e.value) / (n - 1.0)) / n) : 0.0;
        return e;
    }
}
