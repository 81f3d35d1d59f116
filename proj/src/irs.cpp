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

#include "bsplit/irs.hpp"
#include "bsplit/errors.hpp"
#include "bsplit/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace bsplit
{
    namespace
    {
        constexpr double two_pi = 2.0 * std::numbers::pi;

        double wrap_phase(double phi)
        {
            double w = std::fmod(phi, two_pi);
            if (w < 0.0)
                w += two_pi;
            return w >= two_pi ? 0.0 : w;
        }
    }

    PhaseConfig PhaseConfig::from_phases(std::vector<double> phases)
    {
        if (phases.empty())
            throw DimensionError("phase config needs at least one element");
        PhaseConfig c;
        c.kind_ = Kind::explicit_phases;
        c.elements_ = phases.size();
        for (auto &p : phases)
            p = wrap_phase(p);
        c.phases_ = std::move(phases);
        return c;
    }

    PhaseConfig PhaseConfig::from_slope(std::size_t elements, double slope)
    {
        if (elements == 0)
            throw DimensionError("phase config needs at least one element");
        if (!std::isfinite(slope))
            throw ConfigError("phase slope must be finite");
        PhaseConfig c;
        c.kind_ = Kind::linear;
        c.elements_ = elements;
        c.slope_ = slope;
        return c;
    }

    std::vector<double> PhaseConfig::phases() const
    {
        if (kind_ == Kind::explicit_phases)
            return phases_;
        std::vector<double> out(elements_);
        for (std::size_t m = 0; m < elements_; ++m)
        {
            // 2 pi (m-1) a, taking the fractional turn first so the phase stays exact-ish for large m.
            const double turns = static_cast<double>(m) * slope_;
            double frac = turns - std::floor(turns);
            if (frac >= 1.0)
                frac = 0.0;
            out[m] = wrap_phase(two_pi * frac);
        }
        return out;
    }

    std::vector<std::complex<double>> PhaseConfig::theta() const
    {
        const auto ph = phases();
        std::vector<std::complex<double>> t(ph.size());
        std::transform(ph.begin(), ph.end(), t.begin(), [](double p) { return std::polar(1.0, p); });
        return t;
    }

    PhaseConfig optimal_phases(double phi_c, double f_n, const SystemParams &params)
    {
        if (!(std::abs(f_n) <= 0.5 * params.bandwidth_hz * (1.0 + 1e-12)))
            throw DomainError("tuning frequency outside the baseband [-W/2, W/2]");
        return PhaseConfig::from_slope(params.elements, phi_c * (1.0 + f_n / params.carrier_hz));
    }

    PhaseConfig random_config(std::size_t elements, Rng &rng)
    {
        return PhaseConfig::from_slope(elements, rng.uniform(-1.0, 1.0));
    }

    std::vector<BeamSplitSample> beamsplit_gain_profile(double phi_c, double f_tuned, std::span<const double> f_grid,
                                                        std::size_t elements, double carrier_hz, double gamma2)
    {
        const double m = static_cast<double>(elements);
        const double peak = m * m * gamma2;
        std::vector<BeamSplitSample> out;
        out.reserve(f_grid.size());
        for (double f : f_grid)
        {
            // Slope tuned at f_tuned minus the steering argument at f.
            const double delta = phi_c * (f_tuned - f) / carrier_hz;
            const double s = sinc(m * delta);
            out.push_back({f, gamma2 * dirichlet_gain(elements, delta), peak * s * s});
        }
        return out;
    }

    std::vector<double> beamsplit_nulls(double phi_c, double f_tuned, std::size_t elements, double carrier_hz,
                                        double bandwidth_hz)
    {
        std::vector<double> nulls;
        if (phi_c == 0.0)
            return nulls;
        const double step = carrier_hz / (static_cast<double>(elements) * std::abs(phi_c));
        for (int sign : {-1, 1})
        {
            for (int j = 1;; ++j)
            {
                const double f = f_tuned + sign * j * step;
                if (std::abs(f) > 0.5 * bandwidth_hz)
                    break;
                nulls.push_back(f);
            }
        }
        std::sort(nulls.begin(), nulls.end());
        return nulls;
    }
}
