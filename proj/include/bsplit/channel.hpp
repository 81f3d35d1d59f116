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

#ifndef BSPLIT_CHANNEL_HPP
#define BSPLIT_CHANNEL_HPP

#include "bsplit/phase_config.hpp"
#include "bsplit/rng.hpp"

#include <complex>
#include <cstddef>
#include <vector>

namespace bsplit
{
    inline constexpr double speed_of_light = 299792458.0; // m/s

    struct Point2
    {
        double x = 0.0;
        double y = 0.0;
    };

    double distance(Point2 a, Point2 b) noexcept;

    // Constants of one downlink scenario. All quantities are linear (W, not dBm).
    struct SystemParams
    {
        double carrier_hz = 30e9;
        double bandwidth_hz = 510e6;
        std::size_t subcarriers = 128;
        std::size_t elements = 512;
        double spacing_m = 0.0; // 0 selects half a carrier wavelength
        double power_w = 10.0;  // 40 dBm
        double noise_w = 1e-14; // -110 dBm per subcarrier
        double gain_tx = 100.0; // 20 dBi
        double gain_rx = 10.0;  // 10 dBi
        Point2 bs{0.0, 0.0};
        Point2 irs{0.0, 500.0};

        double wavelength() const noexcept { return speed_of_light / carrier_hz; }
        double element_spacing() const noexcept { return spacing_m > 0.0 ? spacing_m : 0.5 * wavelength(); }
        double subcarrier_spacing() const noexcept { return bandwidth_hz / static_cast<double>(subcarriers); }

        // Throws ConfigError when an invariant is violated.
        void validate() const;
    };

    enum class AngleMode
    {
        geometric,       // cascaded angle from BS/IRS/UE positions
        uniform_cascaded // cascaded angle drawn i.i.d. U[-1, 1]
    };

    // User placement and propagation model. The IRS array axis is the x axis, so angles are
    // measured from the y (broadside) direction.
    struct Geometry
    {
        double inner_radius_m = 500.0;
        double outer_radius_m = 1000.0;
        double pathloss_exp_bs_irs = 2.0;
        double pathloss_exp_irs_ue = 4.0;
        AngleMode angle_mode = AngleMode::uniform_cascaded;
        double uniform_delay_s = 0.0; // cascaded delay used in uniform mode

        void validate() const;
    };

    // BS -> IRS hop, shared by all users.
    struct LinkCommon
    {
        double chi = 0.0;    // physical AoA at the IRS, rad
        double phi_tx = 0.0; // d sin(chi) / lambda
        double rho1 = 0.0;
        double tau_tx = 0.0; // s
    };

    struct UserTerminal
    {
        Point2 pos;
        double theta_rx = 0.0; // physical AoD from the IRS, rad
        double phi_rx = 0.0;   // d sin(theta_rx) / lambda
        double phi_c = 0.0;    // cascaded angle phi_tx - phi_rx (or U[-1,1] draw)
        double rho2 = 0.0;
        double tau_c = 0.0; // s
    };

    // Complex gains of one block-fading realization for one user.
    struct FadingDraw
    {
        std::complex<double> alpha;
        std::complex<double> beta;
        std::complex<double> gamma_c; // alpha * beta
    };

    // Baseband frequency of subcarrier n (1-based): n W / N - W / 2 - W / (2N).
    // Throws std::out_of_range outside 1..N.
    double subcarrier_frequency(std::size_t n, const SystemParams &params);
    std::vector<double> subcarrier_grid(const SystemParams &params);

    // ULA steering vector a(x): element m (1-based) is exp(-j 2 pi (m-1) x).
    std::vector<std::complex<double>> steering_vector(std::size_t elements, double x);

    LinkCommon link_common(const SystemParams &params, const Geometry &geometry);

    // Builds a user at a given position (geometric angles, delays and path loss).
    UserTerminal make_user(Point2 pos, const LinkCommon &link, const SystemParams &params, const Geometry &geometry);

    // One user uniform in area over the annulus around the IRS (radius, then azimuth, then the
    // U[-1, 1] cascaded angle in uniform_cascaded mode, where tau_c becomes geometry.uniform_delay_s).
    UserTerminal sample_user(const Geometry &geometry, const LinkCommon &link, const SystemParams &params, Rng &rng);

    // K users uniform in area over the annulus around the IRS. In uniform_cascaded mode phi_c is
    // replaced by an independent U[-1, 1] draw and tau_c by geometry.uniform_delay_s.
    std::vector<UserTerminal> sample_users(std::size_t K, const Geometry &geometry, const LinkCommon &link,
                                           const SystemParams &params, Rng &rng);

    // alpha ~ CN(0, rho1 G_tx), beta ~ CN(0, rho2 G_rx). With fading disabled both are set to the
    // square roots of their variances, so |gamma_c|^2 = rho1 rho2 G_tx G_rx exactly. The same number
    // of variates is consumed either way, keeping fading and non-fading runs on common random numbers.
    FadingDraw draw_fading(const UserTerminal &ue, const LinkCommon &link, const SystemParams &params,
                           bool fading, Rng &rng);

    // H(f) = gamma_c theta^T a((1 + f/fc) phi_c) exp(-j 2 pi f tau_c), by direct M-term summation.
    std::complex<double> channel_response(const UserTerminal &ue, const FadingDraw &fading, const PhaseConfig &config,
                                          double f, const SystemParams &params);

    // |theta^T a((1 + f/fc) phi_c)|^2; O(1) for linear configs.
    double array_factor(const PhaseConfig &config, double phi_c, double f, const SystemParams &params);

    // |H(f)|^2 = |gamma_c|^2 * array_factor.
    double channel_gain(const UserTerminal &ue, const FadingDraw &fading, const PhaseConfig &config, double f,
                        const SystemParams &params);
}

#endif
