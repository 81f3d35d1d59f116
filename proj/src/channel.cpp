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

#include "bsplit/channel.hpp"
#include "bsplit/errors.hpp"
#include "bsplit/numerics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace bsplit
{
    double distance(Point2 a, Point2 b) noexcept
    {
        return std::hypot(a.x - b.x, a.y - b.y);
    }

    void SystemParams::validate() const
    {
        if (!(carrier_hz > 0.0) || !(bandwidth_hz > 0.0))
            throw ConfigError("carrier frequency and bandwidth must be positive");
        if (!(bandwidth_hz < 2.0 * carrier_hz))
            throw ConfigError("bandwidth must be below twice the carrier frequency");
        if (subcarriers == 0 || elements == 0)
            throw ConfigError("subcarrier and element counts must be >= 1");
        if (!(power_w > 0.0) || !(noise_w > 0.0))
            throw ConfigError("transmit power and noise variance must be positive");
        if (!(gain_tx > 0.0) || !(gain_rx > 0.0))
            throw ConfigError("antenna gains must be positive");
        if (spacing_m < 0.0)
            throw ConfigError("element spacing cannot be negative");
        if (distance(bs, irs) <= 0.0)
            throw ConfigError("BS and IRS cannot be co-located");
    }

    void Geometry::validate() const
    {
        if (!(inner_radius_m > 0.0))
            throw ConfigError("annulus inner radius must be positive");
        if (!(inner_radius_m <= outer_radius_m))
            throw ConfigError("annulus inner radius exceeds outer radius");
        if (pathloss_exp_bs_irs < 0.0 || pathloss_exp_irs_ue < 0.0)
            throw ConfigError("path-loss exponents cannot be negative");
        if (uniform_delay_s < 0.0)
            throw ConfigError("delay cannot be negative");
    }

    double subcarrier_frequency(std::size_t n, const SystemParams &params)
    {
        if (n < 1 || n > params.subcarriers)
            throw std::out_of_range("subcarrier index " + std::to_string(n) + " outside 1.." +
                                    std::to_string(params.subcarriers));
        const double W = params.bandwidth_hz;
        const double N = static_cast<double>(params.subcarriers);
        return static_cast<double>(n) * W / N - 0.5 * W - 0.5 * W / N;
    }

    std::vector<double> subcarrier_grid(const SystemParams &params)
    {
        std::vector<double> f(params.subcarriers);
        for (std::size_t n = 1; n <= params.subcarriers; ++n)
            f[n - 1] = subcarrier_frequency(n, params);
        return f;
    }

    std::vector<std::complex<double>> steering_vector(std::size_t elements, double x)
    {
        std::vector<std::complex<double>> a(elements);
        for (std::size_t m = 0; m < elements; ++m)
        {
            // Reduce (m x) modulo 1 before scaling by 2 pi.
            const double t = static_cast<double>(m) * x;
            const double frac = t - std::nearbyint(t);
            a[m] = std::polar(1.0, -2.0 * std::numbers::pi * frac);
        }
        return a;
    }

    LinkCommon link_common(const SystemParams &params, const Geometry &geometry)
    {
        LinkCommon link;
        const double d_bi = distance(params.bs, params.irs);
        link.chi = std::asin((params.bs.x - params.irs.x) / d_bi);
        link.phi_tx = params.element_spacing() * std::sin(link.chi) / params.wavelength();
        link.rho1 = std::pow(d_bi, -geometry.pathloss_exp_bs_irs);
        link.tau_tx = d_bi / speed_of_light;
        return link;
    }

    UserTerminal make_user(Point2 pos, const LinkCommon &link, const SystemParams &params, const Geometry &geometry)
    {
        UserTerminal ue;
        ue.pos = pos;
        const double d_iu = distance(pos, params.irs);
        if (!(d_iu > 0.0))
            throw ConfigError("user cannot be co-located with the IRS");
        ue.theta_rx = std::asin((pos.x - params.irs.x) / d_iu);
        ue.phi_rx = params.element_spacing() * std::sin(ue.theta_rx) / params.wavelength();
        ue.phi_c = link.phi_tx - ue.phi_rx;
        ue.rho2 = std::pow(d_iu, -geometry.pathloss_exp_irs_ue);
        ue.tau_c = link.tau_tx + d_iu / speed_of_light;
        return ue;
    }

    UserTerminal sample_user(const Geometry &geometry, const LinkCommon &link, const SystemParams &params, Rng &rng)
    {
        const double r_in = geometry.inner_radius_m;
        const double r_out = geometry.outer_radius_m;
        const double r = r_in == r_out ? r_in : std::sqrt(rng.uniform(r_in * r_in, r_out * r_out));
        const double ang = rng.uniform(0.0, 2.0 * std::numbers::pi);
        const Point2 pos{params.irs.x + r * std::cos(ang), params.irs.y + r * std::sin(ang)};
        UserTerminal ue = make_user(pos, link, params, geometry);
        if (geometry.angle_mode == AngleMode::uniform_cascaded)
        {
            ue.phi_c = rng.uniform(-1.0, 1.0);
            ue.tau_c = geometry.uniform_delay_s;
        }
        return ue;
    }

    std::vector<UserTerminal> sample_users(std::size_t K, const Geometry &geometry, const LinkCommon &link,
                                           const SystemParams &params, Rng &rng)
    {
        if (K == 0)
            throw ConfigError("user count must be >= 1");
        geometry.validate();
        std::vector<UserTerminal> users;
        users.reserve(K);
        for (std::size_t k = 0; k < K; ++k)
            users.push_back(sample_user(geometry, link, params, rng));
        return users;
    }

    FadingDraw draw_fading(const UserTerminal &ue, const LinkCommon &link, const SystemParams &params,
                           bool fading, Rng &rng)
    {
        FadingDraw out;
        const double sa = std::sqrt(link.rho1 * params.gain_tx);
        const double sb = std::sqrt(ue.rho2 * params.gain_rx);
        const auto x = rng.complex_normal();
        const auto y = rng.complex_normal();
        out.alpha = fading ? sa * x : std::complex<double>(sa);
        out.beta = fading ? sb * y : std::complex<double>(sb);
        out.gamma_c = out.alpha * out.beta;
        return out;
    }

    namespace
    {
        void check_in_band(double f, const SystemParams &params)
        {
            if (!(std::abs(f) <= 0.5 * params.bandwidth_hz * (1.0 + 1e-12)))
                throw DomainError("frequency outside the baseband [-W/2, W/2]");
        }

        std::complex<double> beam_sum(const PhaseConfig &config, double x)
        {
            const auto theta = config.theta();
            const auto a = steering_vector(config.elements(), x);
            std::complex<double> acc{0.0, 0.0};
            for (std::size_t m = 0; m < theta.size(); ++m)
                acc += theta[m] * a[m];
            return acc;
        }
    }

    std::complex<double> channel_response(const UserTerminal &ue, const FadingDraw &fading, const PhaseConfig &config,
                                          double f, const SystemParams &params)
    {
        check_in_band(f, params);
        const double x = (1.0 + f / params.carrier_hz) * ue.phi_c;
        const double delay_turns = f * ue.tau_c - std::nearbyint(f * ue.tau_c);
        return fading.gamma_c * beam_sum(config, x) * std::polar(1.0, -2.0 * std::numbers::pi * delay_turns);
    }

    double array_factor(const PhaseConfig &config, double phi_c, double f, const SystemParams &params)
    {
        check_in_band(f, params);
        const double x = (1.0 + f / params.carrier_hz) * phi_c;
        if (const auto a = config.slope())
            return dirichlet_gain(config.elements(), *a - x);
        return std::norm(beam_sum(config, x));
    }

    double channel_gain(const UserTerminal &ue, const FadingDraw &fading, const PhaseConfig &config, double f,
                        const SystemParams &params)
    {
        return std::norm(fading.gamma_c) * array_factor(config, ue.phi_c, f, params);
    }
}
