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

#include "bsplit/numerics.hpp"
#include "bsplit/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace bsplit
{
    double sinc(double x) noexcept
    {
        const double px = std::numbers::pi * x;
        if (std::abs(px) < 1e-8)
            return 1.0 - px * px / 6.0;
        return std::sin(px) / px;
    }

    double dirichlet_gain(std::uint64_t M, double delta)
    {
        if (M == 0)
            throw DimensionError("dirichlet_gain: M must be >= 1");

        const double m2 = static_cast<double>(M) * static_cast<double>(M);
        if (!std::isfinite(delta))
            return std::numeric_limits<double>::quiet_NaN();

        // Period 1 in delta; the subtraction is exact.
        const double d = delta - std::nearbyint(delta);
        const double den = std::sin(std::numbers::pi * d);
        if (std::abs(den) < 1e-12)
            return m2;

        // M*d with its rounding error recovered by fma, then reduced modulo 1.
        const double md = static_cast<double>(M) * d;
        const double md_err = std::fma(static_cast<double>(M), d, -md);
        const double r = (md - std::nearbyint(md)) + md_err;
        const double num = std::sin(std::numbers::pi * r);

        const double g = (num * num) / (den * den);
        return std::min(g, m2);
    }

    namespace
    {
        constexpr double euler_gamma = 0.57721566490153286061;

        // x <= 2: K1(x) = 1/x + ln(x/2) I1(x) - (x/4) sum_k [psi(k+1) + psi(k+2)] (x^2/4)^k / (k! (k+1)!)
        double k1_series(double x)
        {
            const double y = 0.25 * x * x;
            double term = 1.0; // (x^2/4)^k / (k! (k+1)!)
            double psi_k1 = -euler_gamma;      // psi(k+1)
            double psi_k2 = 1.0 - euler_gamma; // psi(k+2)
            double i1_sum = 0.0;
            double psi_sum = 0.0;
            for (int k = 0; k < 60; ++k)
            {
                i1_sum += term;
                const double contrib = (psi_k1 + psi_k2) * term;
                psi_sum += contrib;
                if (k > 2 && std::abs(contrib) < 1e-18 * std::abs(psi_sum) && term < 1e-18 * i1_sum)
                    break;
                term *= y / ((k + 1.0) * (k + 2.0));
                psi_k1 += 1.0 / (k + 1.0);
                psi_k2 += 1.0 / (k + 2.0);
            }
            const double i1 = 0.5 * x * i1_sum;
            return 1.0 / x + std::log(0.5 * x) * i1 - 0.25 * x * psi_sum;
        }

        // x > 2: Steed's method for CF2 (Temme / Thompson-Barnett), order mu = 0,
        // returns K1 from K0 and the ratio K1/K0.
        double k1_continued_fraction(double x)
        {
            constexpr double eps = 1e-16;
            const double a1 = 0.25; // 1/4 - mu^2
            double b = 2.0 * (1.0 + x);
            double d = 1.0 / b;
            double h = d;
            double delh = d;
            double q1 = 0.0;
            double q2 = 1.0;
            double q = a1;
            double c = a1;
            double a = -a1;
            double s = 1.0 + q * delh;
            for (int i = 1; i < 100000; ++i)
            {
                a -= 2.0 * i;
                c = -a * c / (i + 1.0);
                const double qnew = (q1 - b * q2) / a;
                q1 = q2;
                q2 = qnew;
                q += c * qnew;
                b += 2.0;
                d = 1.0 / (b + a * d);
                delh = (b * d - 1.0) * delh;
                h += delh;
                const double dels = q * delh;
                s += dels;
                if (std::abs(dels / s) < eps)
                    break;
            }
            h *= a1;
            const double k0 = std::sqrt(std::numbers::pi / (2.0 * x)) * std::exp(-x) / s;
            return k0 * (x + 0.5 - h) / x;
        }
    }

    double bessel_k1(double x)
    {
        if (!(x > 0.0) || !std::isfinite(x))
            throw DomainError("bessel_k1: argument must be positive and finite, got " + std::to_string(x));
        if (x > 745.0)
            return 0.0;
        return x <= 2.0 ? k1_series(x) : k1_continued_fraction(x);
    }

    double product_normal_cdf(double z)
    {
        if (std::isnan(z) || z < 0.0)
            throw DomainError("product_normal_cdf: z must be >= 0");
        if (z == 0.0)
            return 0.0;
        if (std::isinf(z))
            return 1.0;
        const double x = 2.0 * std::sqrt(z);
        const double f = 1.0 - x * bessel_k1(x);
        return std::clamp(f, 0.0, 1.0);
    }

    double product_normal_quantile(double p)
    {
        if (!(p >= 0.0 && p < 1.0))
            throw DomainError("product_normal_quantile: p must lie in [0, 1)");
        if (p == 0.0)
            return 0.0;

        const double log_k = -std::log1p(-p); // ln K with p = 1 - 1/K
        double lo = 0.0;
        double hi = std::max(4.0 * log_k * log_k, 64.0);
        while (product_normal_cdf(hi) < p)
        {
            lo = hi;
            hi *= 2.0;
        }

        double f_lo = product_normal_cdf(lo) - p;
        double f_hi = product_normal_cdf(hi) - p;
        for (int it = 0; it < 400 && hi - lo > 1e-15 * std::max(1.0, hi); ++it)
        {
            const double mid = 0.5 * (lo + hi);
            const double f_mid = product_normal_cdf(mid) - p;
            if (f_mid == 0.0)
                return mid;
            if (f_mid < 0.0)
            {
                lo = mid;
                f_lo = f_mid;
            }
            else
            {
                hi = mid;
                f_hi = f_mid;
            }
        }

        // Secant step inside the final bracket.
        double z = 0.5 * (lo + hi);
        if (f_hi != f_lo)
            z = std::clamp(lo - f_lo * (hi - lo) / (f_hi - f_lo), lo, hi);
        return z;
    }

    double lk_approximation(double K)
    {
        if (!(K >= 2.0))
            throw DomainError("lk_approximation: K must be >= 2");
        return std::pow(lk_fit_t * std::log(K), lk_fit_q);
    }
}
