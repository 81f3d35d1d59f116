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

#include "bsplit/experiments.hpp"
#include "bsplit/errors.hpp"
#include "bsplit/irs.hpp"
#include "bsplit/numerics.hpp"
#include "bsplit/scheduling.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

namespace bsplit
{
    void ExperimentResult::add(ScenarioLabel label, std::vector<double> keys, std::string metric, double value,
                               double std_error)
    {
        rows.push_back({std::string(label_name(label)), std::move(keys), std::move(metric), value, std_error});
    }

    std::vector<ResultRow> ExperimentResult::select(ScenarioLabel label, std::string_view metric) const
    {
        std::vector<ResultRow> out;
        for (const auto &r : rows)
            if (r.scenario == label_name(label) && r.metric == metric)
                out.push_back(r);
        return out;
    }

    std::string to_csv(const ExperimentResult &result)
    {
        std::string out = "scenario";
        for (const auto &k : result.key_names)
            out += "," + k;
        out += ",metric,value,stderr\n";
        for (const auto &r : result.rows)
        {
            if (r.keys.size() != result.key_names.size())
                throw DimensionError("result row has " + std::to_string(r.keys.size()) + " keys, expected " +
                                     std::to_string(result.key_names.size()));
            out += r.scenario;
            for (double k : r.keys)
                out += "," + format_number(k);
            out += "," + r.metric + "," + format_number(r.value) + "," + format_number(r.std_error) + "\n";
        }
        return out;
    }

    void write_text_file(const std::filesystem::path &path, const std::string &text)
    {
        if (path.has_parent_path())
            std::filesystem::create_directories(path.parent_path());
        std::ofstream f(path, std::ios::binary | std::ios::trunc);
        if (!f)
            throw std::runtime_error("cannot open " + path.string() + " for writing");
        f << text;
        if (!f)
            throw std::runtime_error("failed writing " + path.string());
    }

    SlopeFit fit_log2_slope(std::span<const double> elements, std::span<const double> values)
    {
        if (elements.size() != values.size() || elements.size() < 2)
            throw DimensionError("slope fit needs at least two (M, value) pairs");
        const double n = static_cast<double>(elements.size());
        double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
        for (std::size_t i = 0; i < elements.size(); ++i)
        {
            const double x = std::log2(elements[i]);
            sx += x;
            sy += values[i];
            sxx += x * x;
            sxy += x * values[i];
        }
        const double den = n * sxx - sx * sx;
        if (den == 0.0)
            throw DimensionError("slope fit needs distinct M values");
        SlopeFit fit;
        fit.slope = (n * sxy - sx * sy) / den;
        fit.intercept = (sy - fit.slope * sx) / n;
        return fit;
    }

    ExperimentResult exp_beam_split(std::span<const std::size_t> elements, const SystemParams &params,
                                    double f_tuned, std::size_t phi_points)
    {
        params.validate();
        if (elements.empty() || phi_points == 0)
            throw ConfigError("beam-split sweep needs element counts and phi points");
        ExperimentResult res;
        res.sweep = "beam-split";
        res.key_names = {"M", "f_hz"};
        res.parameters["f_tuned_hz"] = format_number(f_tuned);
        res.parameters["phi_points"] = std::to_string(phi_points);
        res.parameters["subcarriers"] = std::to_string(params.subcarriers);
        res.parameters["bandwidth_hz"] = format_number(params.bandwidth_hz);
        res.parameters["carrier_hz"] = format_number(params.carrier_hz);

        const auto grid = subcarrier_grid(params);
        std::vector<double> phis(phi_points);
        for (std::size_t i = 0; i < phi_points; ++i)
            phis[i] = -1.0 + (static_cast<double>(i) + 0.5) * 2.0 / static_cast<double>(phi_points);

        for (std::size_t M : elements)
        {
            if (M == 0)
                throw ConfigError("element count must be >= 1");
            std::vector<double> exact(grid.size(), 0.0), approx(grid.size(), 0.0);
            for (double phi : phis)
            {
                const auto prof = beamsplit_gain_profile(phi, f_tuned, grid, M, params.carrier_hz, 1.0);
                for (std::size_t n = 0; n < grid.size(); ++n)
                {
                    exact[n] += prof[n].exact;
                    approx[n] += prof[n].sinc;
                }
            }
            const auto flat = beamsplit_gain_profile(0.0, f_tuned, grid, M, params.carrier_hz, 1.0);
            const double m = static_cast<double>(M);
            for (std::size_t n = 0; n < grid.size(); ++n)
            {
                const double q = static_cast<double>(phi_points);
                res.add(ScenarioLabel::rr_optimal, {m, grid[n]}, "gain_exact", exact[n] / q);
                res.add(ScenarioLabel::rr_optimal, {m, grid[n]}, "gain_sinc", approx[n] / q);
                res.add(ScenarioLabel::rr_optimal, {m, grid[n]}, "gain_flat", flat[n].exact);
            }
        }
        return res;
    }

    namespace
    {
        void record_scenario(ExperimentResult &res, const Scenario &s)
        {
            res.parameters["users"] = std::to_string(s.users);
            res.parameters["elements"] = std::to_string(s.params.elements);
            res.parameters["subcarriers"] = std::to_string(s.params.subcarriers);
            res.parameters["slots"] = std::to_string(s.slots);
            res.parameters["seed"] = std::to_string(s.seed);
        }
    }

    ExperimentResult exp_avg_gain(const Scenario &scenario, unsigned workers)
    {
        scenario.validate();
        ExperimentResult res;
        res.sweep = "avg-gain";
        res.key_names = {"f_hz"};
        record_scenario(res, scenario);
        const auto grid = subcarrier_grid(scenario.params);
        for (ScenarioLabel label : all_labels)
        {
            const Scenario s = scenario.with_label(label);
            const auto c = run_campaign(s, s.scheduler, s.slots, s.seed, workers);
            for (std::size_t n = 0; n < grid.size(); ++n)
                res.add(label, {grid[n]}, "gain", c.mean_gain[n], c.gain_stderr[n]);
        }
        return res;
    }

    namespace
    {
        double jensen_se(const CampaignResult &c, const SystemParams &params)
        {
            double r = 0.0;
            for (double g : c.mean_gain)
                r += subcarrier_rate(g, params);
            return r / params.bandwidth_hz;
        }
    }

    ExperimentResult exp_se_vs_users(std::span<const std::size_t> users, const Scenario &scenario, unsigned workers)
    {
        scenario.validate();
        if (users.empty())
            throw ConfigError("user sweep is empty");
        ExperimentResult res;
        res.sweep = "se-vs-users";
        res.key_names = {"K"};
        record_scenario(res, scenario);
        res.parameters.erase("users");

        const SystemParams &p = scenario.params;
        const double m = static_cast<double>(p.elements);
        const double plateau = std::log2(1.0 + scenario.reference_snr() * m * m);
        for (std::size_t K : users)
        {
            if (K == 0)
                throw ConfigError("user count must be >= 1");
            Scenario base = scenario;
            base.users = K;
            const double k = static_cast<double>(K);
            for (ScenarioLabel label : all_labels)
            {
                const Scenario s = base.with_label(label);
                const auto c = run_campaign(s, s.scheduler, s.slots, s.seed, workers);
                res.add(label, {k}, "se", c.se, c.se_stderr);
                if (label != ScenarioLabel::rr_optimal)
                    res.add(label, {k}, "se_jensen", jensen_se(c, p));
            }
            res.add(ScenarioLabel::maxrate_nofading, {k}, "se_plateau", plateau);
            if (K >= 2)
            {
                const double r = predicted_throughput(k, p.elements, p.subcarriers, p.bandwidth_hz,
                                                      scenario.reference_pathloss(), p.gain_tx, p.gain_rx, p.power_w,
                                                      p.noise_w);
                res.add(ScenarioLabel::maxrate_fading, {k}, "se_theory", r / p.bandwidth_hz);
            }
        }
        return res;
    }

    ExperimentResult exp_se_vs_elements(std::span<const std::size_t> elements, const Scenario &scenario,
                                        unsigned workers)
    {
        scenario.validate();
        if (elements.size() < 2)
            throw ConfigError("element sweep needs at least two values");
        ExperimentResult res;
        res.sweep = "se-vs-elements";
        res.key_names = {"M"};
        record_scenario(res, scenario);
        res.parameters.erase("elements");

        std::vector<std::size_t> sorted(elements.begin(), elements.end());
        std::sort(sorted.begin(), sorted.end());
        // Largest-M half, rounded up, and never fewer than two points.
        const std::size_t top = std::max<std::size_t>(2, (sorted.size() + 1) / 2);
        res.parameters["slope_points"] = std::to_string(top);

        for (ScenarioLabel label : all_labels)
        {
            std::vector<double> ms, se;
            for (std::size_t M : sorted)
            {
                Scenario s = scenario.with_label(label);
                s.params.elements = M;
                const auto c = run_campaign(s, s.scheduler, s.slots, s.seed, workers);
                res.add(label, {static_cast<double>(M)}, "se", c.se, c.se_stderr);
                ms.push_back(static_cast<double>(M));
                se.push_back(c.se);
            }
            const std::size_t off = ms.size() - top;
            const auto fit = fit_log2_slope(std::span(ms).subspan(off), std::span(se).subspan(off));
            res.add(label, {ms.back()}, "slope", fit.slope);
        }
        return res;
    }

    ExperimentResult exp_theorem1(double epsilon, std::span<const std::size_t> users, const SuccessScenario &base,
                                  std::size_t trials, std::uint64_t seed, std::optional<double> delta,
                                  unsigned workers)
    {
        // Fails fast with ParameterError outside the small-angle regime.
        success_probability_bound(epsilon, base.subcarriers, 1.0, base.elements, base.bandwidth_hz, base.carrier_hz);

        ExperimentResult res;
        res.sweep = "theorem1";
        res.key_names = {"K"};
        res.parameters["epsilon"] = format_number(epsilon);
        res.parameters["trials"] = std::to_string(trials);
        res.parameters["subcarriers"] = std::to_string(base.subcarriers);
        res.parameters["elements"] = std::to_string(base.elements);
        res.parameters["seed"] = std::to_string(seed);

        std::vector<std::size_t> grid(users.begin(), users.end());
        std::optional<std::size_t> kmin;
        if (delta)
        {
            res.parameters["delta"] = format_number(*delta);
            kmin = static_cast<std::size_t>(
                k_min(epsilon, *delta, base.subcarriers, base.elements, base.bandwidth_hz, base.carrier_hz));
            grid.push_back(*kmin);
        }
        std::sort(grid.begin(), grid.end());
        grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

        constexpr ScenarioLabel label = ScenarioLabel::maxrate_nofading;
        for (std::size_t K : grid)
        {
            if (K == 0)
                throw ConfigError("user count must be >= 1");
            SuccessScenario s = base;
            s.users = K;
            const double k = static_cast<double>(K);
            res.add(label, {k}, "bound",
                    success_probability_bound(epsilon, s.subcarriers, k, s.elements, s.bandwidth_hz, s.carrier_hz));
            const auto exact = estimate_success_probability(epsilon, s, trials, seed, EventModel::exact_array_factor,
                                                            workers);
            res.add(label, {k}, "estimate", exact.value, exact.std_error);
            const auto taylor = estimate_success_probability(epsilon, s, trials, seed, EventModel::taylor_sinc, workers);
            res.add(label, {k}, "estimate_taylor", taylor.value, taylor.std_error);
            if (kmin && K == *kmin)
                res.add(label, {k}, "k_min", k);
        }
        return res;
    }
}
