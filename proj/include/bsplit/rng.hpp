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

#ifndef BSPLIT_RNG_HPP
#define BSPLIT_RNG_HPP

#include <complex>
#include <cstdint>
#include <random>

namespace bsplit
{
    // Stream tags used when deriving child seeds. The numeric values are part of the
    // reproducibility contract: changing them changes every output.
    enum class Stream : std::uint64_t
    {
        campaign = 1,
        theorem1 = 2,
        jensen = 3,
        order_statistic = 4,
        selftest = 5
    };

    // SplitMix64 finalizer.
    constexpr std::uint64_t mix64(std::uint64_t z) noexcept
    {
        z += 0x9E3779B97F4A7C15ULL;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Counter-based seed split: master seed -> (stream, index) child seed.
    // Child seeds depend only on their arguments, never on evaluation order.
    constexpr std::uint64_t derive_seed(std::uint64_t master, Stream stream, std::uint64_t index) noexcept
    {
        return mix64(mix64(master ^ mix64(static_cast<std::uint64_t>(stream))) ^ mix64(index + 0x632BE59BD9B4E019ULL));
    }

    constexpr std::uint64_t derive_seed(std::uint64_t master, Stream stream, std::uint64_t index, std::uint64_t sub) noexcept
    {
        return mix64(derive_seed(master, stream, index) ^ mix64(sub));
    }

    // Thin wrapper around a 64-bit Mersenne twister with the draws the simulator needs.
    class Rng
    {
    public:
        explicit Rng(std::uint64_t seed) : engine_(seed) {}

        double uniform(double lo, double hi)
        {
            return std::uniform_real_distribution<double>(lo, hi)(engine_);
        }

        double normal() { return normal_(engine_); }

        // Circularly-symmetric standard complex normal, E|z|^2 = 1.
        std::complex<double> complex_normal()
        {
            constexpr double h = 0.70710678118654752440;
            const double re = normal_(engine_);
            const double im = normal_(engine_);
            return {h * re, h * im};
        }

        // Unit-mean exponential; |CN(0,1)|^2 has this law.
        double exponential() { return std::exponential_distribution<double>(1.0)(engine_); }

        std::mt19937_64 &engine() { return engine_; }

    private:
        std::mt19937_64 engine_;
        std::normal_distribution<double> normal_{0.0, 1.0};
    };
}

#endif
