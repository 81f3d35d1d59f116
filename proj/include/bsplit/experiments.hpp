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

#ifndef BSPLIT_EXPERIMENTS_HPP
#define BSPLIT_EXPERIMENTS_HPP

#include "bsplit/scenario.hpp"
#include "bsplit/theory.hpp"

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace bsplit
{
    // One long-format result row: (scenario label, sweep keys, metric, value, stderr).
    struct ResultRow
    {
        std::string scenario;
        std::vector<double> keys;
        std::string metric;
        double value = 0.0;
        double std_error = 0.0;
    };

    struct ExperimentResult
    {
        std::string sweep;
        std::vector<std::string> key_names;
        std::vector<ResultRow> rows;
        // Sweep parameters that are not per-row (trial counts, fixed K or M, ...).
        std::map<std::string, std::string> parameters;

        void add(ScenarioLabel label, std::vector<double> keys, std::string metric, double value,
                 double std_error = 0.0);

        // Rows matching label and metric, in insertion order.
        std::vector<ResultRow> select(ScenarioLabel label, std::string_view metric) const;
    };

    // Fixed schema: header "scenario,<key names...>,metric,value,stderr", '.' decimal separator,
    // shortest round-trip number formatting, '\n' line endings.
    std::string to_csv(const ExperimentResult &result);
    void write_text_file(const std::filesystem::path &path, const std::string &text);

    // Ordinary least squares fit of y against log2(M).
    struct SlopeFit
    {
        double slope = 0.0;
        double intercept = 0.0;
    };
    SlopeFit fit_log2_slope(std::span<const double> elements, std::span<const double> values);

    // Gain vs. subcarrier frequency with the IRS tuned at f_tuned, averaged over phi_c ~ U[-1,1]
    // by a phi_points midpoint rule (unit |gamma|^2). One curve per M: gain_exact, gain_sinc, and
    // the phi_c = 0 control gain_flat. Keys: (M, f_hz).
    ExperimentResult exp_beam_split(std::span<const std::size_t> elements, const SystemParams &params,
                                    double f_tuned = 0.0, std::size_t phi_points = 2001);

    // Per-subcarrier mean gain of the scheduled user for the three labelled scenarios. Keys: f_hz.
    ExperimentResult exp_avg_gain(const Scenario &scenario, unsigned workers = 1);

    // Spectral efficiency vs. K for the three scenarios (metric "se"), plus for the max-rate
    // scenarios the log-of-mean estimate "se_jensen", the closed-form "se_theory" (fading) and the
    // full-array-gain plateau "se_plateau" (no fading). Keys: K.
    ExperimentResult exp_se_vs_users(std::span<const std::size_t> users, const Scenario &scenario,
                                     unsigned workers = 1);

    // Spectral efficiency vs. M (metric "se") plus the fitted log2-M slope over the largest-M half
    // of the sweep (metric "slope", keyed by the largest M). Keys: M.
    ExperimentResult exp_se_vs_elements(std::span<const std::size_t> elements, const Scenario &scenario,
                                        unsigned workers = 1);

    // Success-bound validation: per K the analytic bound and the exact-array-factor estimate
    // (metrics "bound", "estimate", "estimate_taylor"). With delta set, K = k_min(eps, delta) is
    // added to the grid and reported as metric "k_min". Keys: K.
    ExperimentResult exp_theorem1(double epsilon, std::span<const std::size_t> users, const SuccessScenario &base,
                                  std::size_t trials, std::uint64_t seed, std::optional<double> delta = std::nullopt,
                                  unsigned workers = 1);

    // Flat "key = value" configuration text, '#' starts a comment.
    using ConfigMap = std::map<std::string, std::string>;
    ConfigMap parse_config_text(const std::string &text);
    ConfigMap read_config_file(const std::filesystem::path &path);

    // Applies known keys (unit-suffixed, dB quantities converted to linear); unknown keys or
    // malformed values throw ConfigError.
    void apply_config(Scenario &scenario, const ConfigMap &config);

    // Inverse of apply_config; parse/apply of the dump reproduces the scenario exactly.
    ConfigMap scenario_to_config(const Scenario &scenario);
    std::string config_to_text(const ConfigMap &config);

    // Shortest round-trip decimal representation, locale independent.
    std::string format_number(double v);
}

#endif
