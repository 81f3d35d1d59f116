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

#include "bsplit/selftest.hpp"
#include "bsplit/channel.hpp"
#include "bsplit/experiments.hpp"
#include "bsplit/irs.hpp"
#include "bsplit/numerics.hpp"
#include "bsplit/rng.hpp"
#include "bsplit/scheduling.hpp"
#include "bsplit/theory.hpp"

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <ostream>
#include <string>
#include <vector>

namespace bsplit
{
    namespace
    {
        bool dirichlet_matches_direct_sum()
        {
            Rng rng(derive_seed(default_seed, Stream::selftest, 1));
            for (int i = 0; i < 200; ++i)
            {
                const auto M = static_cast<std::size_t>(1 + rng.uniform(0.0, 256.0));
                const double delta = rng.uniform(-2.0, 2.0);
                std::complex<long double> acc = 0.0L;
                for (std::size_t m = 0; m < M; ++m)
                {
                    const long double t = static_cast<long double>(m) * delta;
                    const long double frac = t - std::nearbyint(t);
                    acc += std::polar(1.0L, -2.0L * std::numbers::pi_v<long double> * frac);
                }
                const double ref = static_cast<double>(std::norm(acc));
                if (std::abs(dirichlet_gain(M, delta) - ref) > 1e-9 * std::max(ref, 1e-3))
                    return false;
            }
            return true;
        }

        bool k1_reference_values()
        {
            const double xs[] = {0.1, 1.0, 2.0, 5.0, 10.0};
            const double ref[] = {9.8538447808705, 0.60190723019723, 0.13986588181652, 4.0446134454521e-3,
                                  1.8648773453825e-5};
            for (int i = 0; i < 5; ++i)
                if (std::abs(bessel_k1(xs[i]) - ref[i]) > 1e-7 * ref[i])
                    return false;
            return true;
        }

        bool quantile_inverts_cdf()
        {
            for (double p = 0.01; p < 0.9999; p += 0.0473)
                if (std::abs(product_normal_cdf(product_normal_quantile(p)) - p) > 1e-8)
                    return false;
            return true;
        }

        bool max_rate_is_optimal()
        {
            Rng rng(derive_seed(default_seed, Stream::selftest, 2));
            SystemParams p;
            p.subcarriers = 3;
            for (int inst = 0; inst < 50; ++inst)
            {
                GainMatrix g(3, 3);
                for (std::size_t k = 0; k < 3; ++k)
                    for (std::size_t n = 0; n < 3; ++n)
                        g(k, n) = rng.exponential() * 1e-3;
                const double best = slot_throughput(g, schedule_max_rate(g), p);
                for (std::size_t code = 0; code < 27; ++code)
                {
                    ScheduleDecision d{{code % 3, (code / 3) % 3, code / 9}, 0};
                    if (slot_throughput(g, d, p) > best * (1.0 + 1e-12))
                        return false;
                }
            }
            return true;
        }

        bool slope_shortcut_matches_expansion()
        {
            Rng rng(derive_seed(default_seed, Stream::selftest, 3));
            SystemParams p;
            p.elements = 64;
            for (int i = 0; i < 100; ++i)
            {
                const auto cfg = PhaseConfig::from_slope(p.elements, rng.uniform(-1.0, 1.0));
                const double phi = rng.uniform(-1.0, 1.0);
                const double f = rng.uniform(-0.5, 0.5) * p.bandwidth_hz;
                const double a = array_factor(cfg, phi, f, p);
                const double b = array_factor(cfg.expanded(), phi, f, p);
                if (std::abs(a - b) > 1e-9 * std::max(b, 1.0))
                    return false;
            }
            return true;
        }

        bool campaign_is_worker_independent()
        {
            Scenario s;
            s.users = 40;
            s.params.elements = 64;
            s.params.subcarriers = 16;
            s.slots = 12;
            const auto one = run_campaign(s, 1);
            const auto four = run_campaign(s, 4);
            return one.throughput_bps == four.throughput_bps && one.mean_gain == four.mean_gain;
        }

        bool bound_is_consistent_with_kmin()
        {
            const std::uint64_t k = k_min(0.1, 0.2, 32, 128, 510e6, 30e9);
            return success_probability_bound(0.1, 32, static_cast<double>(k), 128, 510e6, 30e9) >= 0.8 &&
                   success_probability_bound(0.1, 32, static_cast<double>(k - 1), 128, 510e6, 30e9) < 0.8;
        }
    }

    bool run_selftest(std::ostream &out)
    {
        const std::pair<const char *, std::function<bool()>> checks[] = {
            {"dirichlet gain vs direct phasor sum", dirichlet_matches_direct_sum},
            {"bessel K1 reference values", k1_reference_values},
            {"product-normal quantile inverts cdf", quantile_inverts_cdf},
            {"max-rate schedule beats all assignments", max_rate_is_optimal},
            {"linear config shortcut vs expanded phases", slope_shortcut_matches_expansion},
            {"campaign output independent of workers", campaign_is_worker_independent},
            {"success bound at k_min", bound_is_consistent_with_kmin},
        };
        bool all = true;
        for (const auto &[name, fn] : checks)
        {
            bool ok = false;
            try
            {
                ok = fn();
            }
            catch (const std::exception &e)
            {
                out << "  exception: " << e.what() << "\n";
            }
            out << (ok ? "PASS  " : "FAIL  ") << name << "\n";
            all = all && ok;
        }
        return all;
    }
}
