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

#ifndef BSPLIT_THEORY_HPP
#define BSPLIT_THEORY_HPP

#include "bsplit/scenario.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace bsplit
{
    // Inputs of the every-subcarrier success event: N subcarriers, K users with i.i.d. U[-1,1]
    // cascaded angles, an M-element IRS with a U[-1,1] random slope.
    struct SuccessScenario
    {
        std::size_t subcarriers = 32;
        std::size_t users = 1000;
        std::size_t elements = 128;
        double bandwidth_hz = 510e6;
        double carrier_hz = 30e9;
    };

    // How a single (user, subcarrier) success is decided by the Monte Carlo estimator.
    enum class EventModel
    {
        exact_array_factor, // dirichlet_gain(M, a - (1 + f_n/fc) phi) >= (1 - eps) M^2
        taylor_sinc         // |a - (1 + f_n/fc) phi| <= sqrt(3 eps) / (pi M), single main lobe
    };

    struct Estimate
    {
        double value = 0.0;
        double std_error = 0.0;
        std::size_t trials = 0;
    };

    // sqrt(3 eps) / (pi M (1 + f / fc)): per-user success probability of the small-angle event.
    double taylor_event_probability(double epsilon, std::size_t elements, double f_hz, double carrier_hz);

    // Lower bound 1 - N (1 - sqrt(3 eps) / (pi M (1 + W / (2 fc))))^K, clamped to [0, 1].
    // K is real so the K -> infinity limit can be probed. Throws ParameterError when the
    // inner term reaches 1 or eps is outside (0, 1).
    double success_probability_bound(double epsilon, std::size_t subcarriers, double users, std::size_t elements,
                                     double bandwidth_hz, double carrier_hz);

    // Fraction of trials in which every subcarrier has a user above (1 - eps) M^2, with the
    // binomial standard error. Trial i draws from derive_seed(seed, Stream::theorem1, i).
    Estimate estimate_success_probability(double epsilon, const SuccessScenario &scenario, std::size_t trials,
                                          std::uint64_t seed, EventModel model = EventModel::exact_array_factor,
                                          unsigned workers = 1);

    // -ln(N / delta) / ln(1 - sqrt(3 eps) / (pi M (1 + W / (2 fc)))), real-valued and rounded up.
    double k_min_real(double epsilon, double delta, std::size_t subcarriers, std::size_t elements,
                      double bandwidth_hz, double carrier_hz);
    std::uint64_t k_min(double epsilon, double delta, std::size_t subcarriers, std::size_t elements,
                        double bandwidth_hz, double carrier_hz);

    // W log2(1 + rho G_tx G_rx P / (N sigma^2) M^2 (t ln K)^q), bit/s. K >= 2.
    double predicted_throughput(double users, std::size_t elements, std::size_t subcarriers, double bandwidth_hz,
                                double rho, double gain_tx, double gain_rx, double power_w, double noise_w);

    struct JensenResult
    {
        double throughput_bps = 0.0;
        std::vector<double> mean_max_gain; // per subcarrier
    };

    // sum_n (W/N) log2(1 + P / (N sigma^2) E[max_k |H(k, t, f_n)|^2]) with the expectation
    // estimated over `trials` max-rate slots. The slots are the ones run_campaign draws for
    // the same seed, so the result bounds the matched campaign average from above.
    JensenResult jensen_throughput(const Scenario &scenario, std::size_t trials, std::uint64_t seed,
                                   unsigned workers = 1);

    // Monte Carlo E[max_{k <= K} |x_k y_k|^2] for independent standard complex normals.
    Estimate mean_max_product_normal(std::size_t users, std::size_t trials, std::uint64_t seed,
                                     unsigned workers = 1);
}

#endif
