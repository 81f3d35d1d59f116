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

#ifndef BSPLIT_IRS_HPP
#define BSPLIT_IRS_HPP

#include "bsplit/channel.hpp"
#include "bsplit/phase_config.hpp"
#include "bsplit/rng.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace bsplit
{
    // Phases that co-phase the array for cascaded angle phi_c at baseband frequency f_n:
    // slope a = phi_c (1 + f_n / fc).
    PhaseConfig optimal_phases(double phi_c, double f_n, const SystemParams &params);

    // Randomized opportunistic configuration: slope a ~ U[-1, 1], one draw per call.
    PhaseConfig random_config(std::size_t elements, Rng &rng);

    struct BeamSplitSample
    {
        double f_hz = 0.0;
        double exact = 0.0; // M^2 gamma2 dirichlet ratio
        double sinc = 0.0;  // M^2 gamma2 sinc^2(M (f_tuned - f) phi_c / fc)
    };

    // Gain seen by a user with cascaded angle phi_c when the IRS is tuned to that user at
    // f_tuned, evaluated on f_grid. gamma2 is |gamma_c|^2.
    std::vector<BeamSplitSample> beamsplit_gain_profile(double phi_c, double f_tuned, std::span<const double> f_grid,
                                                        std::size_t elements, double carrier_hz, double gamma2);

    // Frequency offsets from f_tuned at which the sinc approximation has its j-th null,
    // j = +-1, +-2, ...: f = f_tuned - j fc / (M phi_c). Empty for phi_c = 0.
    std::vector<double> beamsplit_nulls(double phi_c, double f_tuned, std::size_t elements, double carrier_hz,
                                        double bandwidth_hz);
}

#endif
