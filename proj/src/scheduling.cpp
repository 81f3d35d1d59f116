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

#include "bsplit/scheduling.hpp"
#include "bsplit/errors.hpp"
#include "bsplit/irs.hpp"
#include "bsplit/numerics.hpp"
#include "bsplit/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace bsplit
{
    GainMatrix::GainMatrix(std::size_t users, std::size_t subcarriers, double fill)
        : users_(users), subcarriers_(subcarriers), values_(users * subcarriers, fill)
    {
        if (users == 0 || subcarriers == 0)
            throw DimensionError("gain matrix needs at least one user and one subcarrier");
    }

    ScheduleDecision schedule_max_rate(const GainMatrix &gains, std::size_t slot)
    {
        ScheduleDecision d;
        d.slot = slot;
        d.assignment.assign(gains.subcarriers(), 0);
        for (std::size_t n = 0; n < gains.subcarriers(); ++n)
        {
            double best = gains(0, n);
            for (std::size_t k = 1; k < gains.users(); ++k)
            {
                if (gains(k, n) > best)
                {
                    best = gains(k, n);
                    d.assignment[n] = k;
                }
            }
        }
        return d;
    }

    ScheduleDecision schedule_round_robin(std::size_t users, std::size_t subcarriers, std::size_t slot)
    {
        if (users == 0)
            throw DimensionError("round robin needs at least one user");
        ScheduleDecision d;
        d.slot = slot;
        d.assignment.assign(subcarriers, slot % users);
        return d;
    }

    double subcarrier_rate(double gain, const SystemParams &params)
    {
        const double n = static_cast<double>(params.subcarriers);
        return params.bandwidth_hz / n * std::log2(1.0 + params.power_w / (n * params.noise_w) * gain);
    }

    double slot_throughput(const GainMatrix &gains, const ScheduleDecision &decision, const SystemParams &params)
    {
        if (decision.assignment.size() != gains.subcarriers())
            throw DimensionError("schedule covers " + std::to_string(decision.assignment.size()) +
                                 " subcarriers, gain matrix has " + std::to_string(gains.subcarriers()));
        double sum = 0.0;
        for (std::size_t n = 0; n < gains.subcarriers(); ++n)
        {
            const std::size_t k = decision.assignment[n];
            if (k >= gains.users())
                throw DimensionError("scheduled user index out of range");
            sum += subcarrier_rate(gains(k, n), params);
        }
        return sum;
    }

    SlotOutcome simulate_slot(const Scenario &scenario, SchedulerKind kind, std::size_t slot, std::uint64_t seed)
    {
        scenario.validate();
        const SystemParams &params = scenario.params;
        const Geometry geometry = scenario.effective_geometry();
        const std::size_t K = scenario.users;
        const std::size_t N = params.subcarriers;
        const std::size_t M = params.elements;

        // Draw order: IRS slope, then (position, angle, fading) user by user. Users are a prefix
        // of the slot stream, so a run with more users sees a superset of the same users.
        Rng rng(derive_seed(seed, Stream::campaign, slot));
        const double slope = *random_config(M, rng).slope();
        const LinkCommon link = link_common(params, geometry);
        const std::size_t drawn = kind == SchedulerKind::max_rate ? K : slot % K + 1;
        std::vector<UserTerminal> users;
        std::vector<double> gamma2;
        users.reserve(drawn);
        gamma2.reserve(drawn);
        for (std::size_t k = 0; k < drawn; ++k)
        {
            users.push_back(sample_user(geometry, link, params, rng));
            gamma2.push_back(std::norm(draw_fading(users.back(), link, params, scenario.fading, rng).gamma_c));
        }

        const auto grid = subcarrier_grid(params);
        std::vector<double> scale(N);
        for (std::size_t n = 0; n < N; ++n)
            scale[n] = 1.0 + grid[n] / params.carrier_hz;

        SlotOutcome out;
        if (kind == SchedulerKind::max_rate)
        {
            const double a = slope;
            GainMatrix gains(K, N);
            for (std::size_t k = 0; k < K; ++k)
            {
                auto row = gains.row(k);
                const double phi = users[k].phi_c;
                for (std::size_t n = 0; n < N; ++n)
                    row[n] = gamma2[k] * dirichlet_gain(M, a - scale[n] * phi);
            }
            const auto decision = schedule_max_rate(gains, slot);
            out.throughput_bps = slot_throughput(gains, decision, params);
            out.scheduled_gain.resize(N);
            for (std::size_t n = 0; n < N; ++n)
                out.scheduled_gain[n] = gains(decision.assignment[n], n);
        }
        else
        {
            // Only the scheduled user's row matters; it is stored as a one-row matrix.
            const std::size_t u = schedule_round_robin(K, 1, slot).assignment.front();
            const double a = *optimal_phases(users[u].phi_c, scenario.rr_tuning_hz, params).slope();
            GainMatrix gains(1, N);
            for (std::size_t n = 0; n < N; ++n)
                gains(0, n) = gamma2[u] * dirichlet_gain(M, a - scale[n] * users[u].phi_c);
            const ScheduleDecision decision{std::vector<std::size_t>(N, 0), slot};
            out.throughput_bps = slot_throughput(gains, decision, params);
            out.scheduled_gain.assign(gains.row(0).begin(), gains.row(0).end());
        }
        return out;
    }

    namespace
    {
        double stderr_of(double sum, double sum_sq, std::size_t count)
        {
            if (count < 2)
                return 0.0;
            const double n = static_cast<double>(count);
            const double mean = sum / n;
            const double var = std::max(0.0, (sum_sq - n * mean * mean) / (n - 1.0));
            return std::sqrt(var / n);
        }
    }

    CampaignResult run_campaign(const Scenario &scenario, SchedulerKind kind, std::size_t slots, std::uint64_t seed,
                                unsigned workers)
    {
        scenario.validate();
        if (slots == 0)
            throw ConfigError("campaign needs at least one slot");

        const auto outcomes = parallel_map(slots, workers, [&](std::size_t t)
                                           { return simulate_slot(scenario, kind, t, seed); });

        const std::size_t N = scenario.params.subcarriers;
        CampaignResult r;
        r.slots = slots;
        double sum = 0.0, sum_sq = 0.0;
        std::vector<double> g_sum(N, 0.0), g_sq(N, 0.0);
        for (const auto &o : outcomes)
        {
            sum += o.throughput_bps;
            sum_sq += o.throughput_bps * o.throughput_bps;
            for (std::size_t n = 0; n < N; ++n)
            {
                g_sum[n] += o.scheduled_gain[n];
                g_sq[n] += o.scheduled_gain[n] * o.scheduled_gain[n];
            }
        }
        const double T = static_cast<double>(slots);
        const double W = scenario.params.bandwidth_hz;
        r.throughput_bps = sum / T;
        r.throughput_stderr = stderr_of(sum, sum_sq, slots);
        r.se = r.throughput_bps / W;
        r.se_stderr = r.throughput_stderr / W;
        r.mean_gain.resize(N);
        r.gain_stderr.resize(N);
        for (std::size_t n = 0; n < N; ++n)
        {
            r.mean_gain[n] = g_sum[n] / T;
            r.gain_stderr[n] = stderr_of(g_sum[n], g_sq[n], slots);
        }
        return r;
    }

    CampaignResult run_campaign(const Scenario &scenario, unsigned workers)
    {
        return run_campaign(scenario, scenario.scheduler, scenario.slots, scenario.seed, workers);
    }
}
