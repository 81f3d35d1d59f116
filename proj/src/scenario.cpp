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

#include "bsplit/scenario.hpp"
#include "bsplit/errors.hpp"

#include <cmath>

namespace bsplit
{
    std::string_view label_name(ScenarioLabel label) noexcept
    {
        switch (label)
        {
        case ScenarioLabel::rr_optimal:
            return "rr-optimal";
        case ScenarioLabel::maxrate_nofading:
            return "maxrate-nofading";
        case ScenarioLabel::maxrate_fading:
            return "maxrate-fading";
        }
        return "unknown";
    }

    std::string_view scheduler_name(SchedulerKind kind) noexcept
    {
        return kind == SchedulerKind::max_rate ? "max-rate" : "round-robin";
    }

    std::string_view angle_mode_name(AngleMode mode) noexcept
    {
        return mode == AngleMode::geometric ? "geometric" : "uniform";
    }

    void Scenario::validate() const
    {
        params.validate();
        effective_geometry().validate();
        if (users == 0)
            throw ConfigError("user count must be >= 1");
        if (slots == 0)
            throw ConfigError("slot count must be >= 1");
        if (common_distance_m < 0.0)
            throw ConfigError("common distance cannot be negative");
        if (!(std::abs(rr_tuning_hz) <= 0.5 * params.bandwidth_hz))
            throw ConfigError("round-robin tuning frequency outside the band");
    }

    Geometry Scenario::effective_geometry() const
    {
        Geometry g = geometry;
        if (common_distance_m > 0.0)
        {
            g.inner_radius_m = common_distance_m;
            g.outer_radius_m = common_distance_m;
        }
        return g;
    }

    Scenario Scenario::with_label(ScenarioLabel label) const
    {
        Scenario s = *this;
        s.scheduler = label == ScenarioLabel::rr_optimal ? SchedulerKind::round_robin : SchedulerKind::max_rate;
        s.fading = label != ScenarioLabel::maxrate_nofading;
        return s;
    }

    double Scenario::reference_pathloss() const
    {
        const Geometry g = effective_geometry();
        const double rho1 = std::pow(distance(params.bs, params.irs), -g.pathloss_exp_bs_irs);
        const double ri = g.inner_radius_m;
        const double ro = g.outer_radius_m;
        const double e = g.pathloss_exp_irs_ue;
        double rho2 = 0.0;
        if (ri == ro)
            rho2 = std::pow(ri, -e);
        else if (e == 2.0)
            rho2 = 2.0 * std::log(ro / ri) / (ro * ro - ri * ri);
        else
            rho2 = 2.0 / (2.0 - e) * (std::pow(ro, 2.0 - e) - std::pow(ri, 2.0 - e)) / (ro * ro - ri * ri);
        return rho1 * rho2;
    }

    double Scenario::reference_snr() const
    {
        return params.power_w / (static_cast<double>(params.subcarriers) * params.noise_w) * reference_pathloss() *
               params.gain_tx * params.gain_rx;
    }

    double dbm_to_watt(double dbm) noexcept { return std::pow(10.0, (dbm - 30.0) / 10.0); }
    double db_to_linear(double db) noexcept { return std::pow(10.0, db / 10.0); }
}
