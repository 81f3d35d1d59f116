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

#ifndef BSPLIT_SCENARIO_HPP
#define BSPLIT_SCENARIO_HPP

#include "bsplit/channel.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace bsplit
{
    enum class SchedulerKind
    {
        max_rate,
        round_robin
    };

    // The three compared configurations.
    enum class ScenarioLabel
    {
        rr_optimal,       // round robin, IRS tuned to the scheduled user at rr_tuning_hz
        maxrate_nofading, // random IRS slope, max-rate scheduler, deterministic gains
        maxrate_fading    // random IRS slope, max-rate scheduler, product-normal fading
    };

    inline constexpr ScenarioLabel all_labels[] = {ScenarioLabel::rr_optimal, ScenarioLabel::maxrate_nofading,
                                                   ScenarioLabel::maxrate_fading};

    std::string_view label_name(ScenarioLabel label) noexcept;
    std::string_view scheduler_name(SchedulerKind kind) noexcept;
    std::string_view angle_mode_name(AngleMode mode) noexcept;

    inline constexpr std::uint64_t default_seed = 0x00C0FFEE5EED2024ULL;

    // One simulated deployment. Defaults reproduce the reference setup: M = 512, N = 128,
    // W = 510 MHz, fc = 30 GHz, P = 40 dBm, sigma^2 = -110 dBm, G_tx = 20 dBi, G_rx = 10 dBi,
    // BS at (0, 0), IRS at (0, 500), users on the 0.5-1 km annulus, exponents 2 and 4.
    struct Scenario
    {
        SystemParams params;
        Geometry geometry;
        std::size_t users = 5000;
        bool fading = true;
        SchedulerKind scheduler = SchedulerKind::max_rate;
        std::size_t slots = 200;
        std::uint64_t seed = default_seed;
        double rr_tuning_hz = 0.0;
        // Users re-dropped at this IRS distance when > 0 (equal path loss for all users).
        double common_distance_m = 0.0;

        void validate() const;

        // Effective geometry after applying common_distance_m.
        Geometry effective_geometry() const;

        // Copy with scheduler and fading set to match `label`.
        Scenario with_label(ScenarioLabel label) const;

        // rho1 * rho2 for the equal-path-loss case, or rho1 * E[rho2] over the annulus.
        double reference_pathloss() const;

        // (P / (N sigma^2)) * rho * G_tx * G_rx, i.e. the per-unit-array-gain SNR.
        double reference_snr() const;
    };

    double dbm_to_watt(double dbm) noexcept;
    double db_to_linear(double db) noexcept;
}

#endif
