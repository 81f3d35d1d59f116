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

#ifndef BSPLIT_NUMERICS_HPP
#define BSPLIT_NUMERICS_HPP

#include <cstdint>

namespace bsplit
{
    // Normalized sinc, sin(pi x) / (pi x), with sinc(0) = 1.
    double sinc(double x) noexcept;

    // Squared magnitude of the M-term geometric phasor sum |sum_m exp(j 2 pi m delta)|^2,
    // i.e. sin^2(pi M delta) / sin^2(pi delta), equal to M^2 at integer delta.
    // The argument is reduced modulo 1 with error-free transformations, so the result keeps
    // full relative accuracy close to the nulls and for |delta| well beyond 1.
    double dirichlet_gain(std::uint64_t M, double delta);

    // Modified Bessel function of the second kind, order one, x > 0.
    // Power series for x <= 2, Steed's continued fraction (CF2) above.
    // Throws DomainError for x <= 0 or non-finite x.
    double bessel_k1(double x);

    // CDF of |x y|^2 for independent standard complex normals x, y:
    //   F(z) = 1 - 2 sqrt(z) K1(2 sqrt(z)),  z >= 0.
    double product_normal_cdf(double z);

    // Inverse of product_normal_cdf on [0, 1): bracketed bisection followed by a secant polish.
    // |F(z) - p| <= 1e-10. Throws DomainError outside [0, 1).
    double product_normal_quantile(double p);

    // Closed-form fit of the (1 - 1/K) quantile of the product-normal law:
    //   l_K = (0.7498 ln K)^1.71,  K >= 2.
    inline constexpr double lk_fit_t = 0.7498;
    inline constexpr double lk_fit_q = 1.71;
    double lk_approximation(double K);
}

#endif
