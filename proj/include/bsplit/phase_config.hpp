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

#ifndef BSPLIT_PHASE_CONFIG_HPP
#define BSPLIT_PHASE_CONFIG_HPP

#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

namespace bsplit
{
    // IRS phase vector theta = [exp(j phi_1), ..., exp(j phi_M)].
    //
    // A config is either an explicit list of M phases, or a linear ramp
    // phi_m = 2 pi (m-1) a generated by a single slope a. Linear configs keep their slope so that
    // the array factor can be evaluated in O(1) through dirichlet_gain; expand() turns them into
    // the equivalent explicit config.
    class PhaseConfig
    {
    public:
        enum class Kind
        {
            explicit_phases,
            linear
        };

        // Phases are wrapped into [0, 2 pi).
        static PhaseConfig from_phases(std::vector<double> phases);
        static PhaseConfig from_slope(std::size_t elements, double slope);

        Kind kind() const noexcept { return kind_; }
        std::size_t elements() const noexcept { return elements_; }
        std::optional<double> slope() const noexcept
        {
            return kind_ == Kind::linear ? std::optional<double>(slope_) : std::nullopt;
        }

        // Element phases in [0, 2 pi), expanded from the slope for linear configs.
        std::vector<double> phases() const;
        std::vector<std::complex<double>> theta() const;
        PhaseConfig expanded() const { return from_phases(phases()); }

    private:
        PhaseConfig() = default;

        Kind kind_ = Kind::explicit_phases;
        std::size_t elements_ = 0;
        double slope_ = 0.0;
        std::vector<double> phases_;
    };
}

#endif
