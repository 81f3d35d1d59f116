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

#ifndef BSPLIT_SCHEDULING_HPP
#define BSPLIT_SCHEDULING_HPP

#include "bsplit/channel.hpp"
#include "bsplit/scenario.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace bsplit
{
    // K x N channel gains |H(k, t, f_n)|^2 of one slot, row-major by user.
    class GainMatrix
    {
    public:
        GainMatrix(std::size_t users, std::size_t subcarriers, double fill = 0.0);

        std::size_t users() const noexcept { return users_; }
        std::size_t subcarriers() const noexcept { return subcarriers_; }

        double operator()(std::size_t k, std::size_t n) const { return values_[k * subcarriers_ + n]; }
        double &operator()(std::size_t k, std::size_t n) { return values_[k * subcarriers_ + n]; }

        std::span<const double> row(std::size_t k) const { return {values_.data() + k * subcarriers_, subcarriers_}; }
        std::span<double> row(std::size_t k) { return {values_.data() + k * subcarriers_, subcarriers_}; }

    private:
        std::size_t users_;
        std::size_t subcarriers_;
        std::vector<double> values_;
    };

    // assignment[n] is the (0-based) user served on subcarrier n in slot `slot` (0-based).
    struct ScheduleDecision
    {
        std::vector<std::size_t> assignment;
        std::size_t slot = 0;
    };

    // Per-subcarrier argmax of the gain; ties go to the lowest user index.
    ScheduleDecision schedule_max_rate(const GainMatrix &gains, std::size_t slot = 0);

    // Whole band to user (slot mod K).
    ScheduleDecision schedule_round_robin(std::size_t users, std::size_t subcarriers, std::size_t slot);

    // (W/N) log2(1 + P / (N sigma^2) g), equal power per subcarrier.
    double subcarrier_rate(double gain, const SystemParams &params);

    // Sum of subcarrier_rate over the scheduled gains, bit/s.
    double slot_throughput(const GainMatrix &gains, const ScheduleDecision &decision, const SystemParams &params);

    struct SlotOutcome
    {
        double throughput_bps = 0.0;
        std::vector<double> scheduled_gain; // per subcarrier
    };

    // One slot of a campaign: user drop, fading, IRS configuration, scheduling, rate.
    // Randomness comes from derive_seed(seed, Stream::campaign, slot) only.
    SlotOutcome simulate_slot(const Scenario &scenario, SchedulerKind kind, std::size_t slot, std::uint64_t seed);

    struct CampaignResult
    {
        std::size_t slots = 0;
        double throughput_bps = 0.0;
        double throughput_stderr = 0.0;
        double se = 0.0; // throughput / W, bit/s/Hz
        double se_stderr = 0.0;
        std::vector<double> mean_gain; // per subcarrier, scheduled user
        std::vector<double> gain_stderr;
    };

    // Time average over `slots` i.i.d. slots:
    //  - max_rate: fresh random IRS slope per slot, per-subcarrier argmax scheduling;
    //  - round_robin: the IRS is re-tuned each slot to the scheduled user at scenario.rr_tuning_hz.
    // Slots run on up to `workers` threads; reduction is in slot order.
    CampaignResult run_campaign(const Scenario &scenario, SchedulerKind kind, std::size_t slots, std::uint64_t seed,
                                unsigned workers = 1);
    CampaignResult run_campaign(const Scenario &scenario, unsigned workers = 1);
}

#endif
