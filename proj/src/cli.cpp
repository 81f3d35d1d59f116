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

#include "bsplit/cli.hpp"
#include "bsplit/errors.hpp"
#include "bsplit/experiments.hpp"
#include "bsplit/numerics.hpp"
#include "bsplit/selftest.hpp"
#include "bsplit/theory.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#ifndef BSPLIT_VERSION
#define BSPLIT_VERSION "0.0.0"
#endif
#ifndef BSPLIT_GIT_DESCRIBE
#define BSPLIT_GIT_DESCRIBE "unknown"
#endif

namespace bsplit
{
    namespace
    {
        namespace fs = std::filesystem;

        struct CommonOptions
        {
            std::string config;
            std::optional<std::uint64_t> seed;
            std::optional<std::size_t> slots;
            std::optional<std::size_t> users;
            std::optional<std::size_t> elements;
            std::optional<std::size_t> subcarriers;
            std::optional<double> common_distance;
            std::string out;
            std::string manifest;
            unsigned threads = 0;
        };

        void add_common(CLI::App *sub, CommonOptions &o, bool outputs)
        {
            sub->add_option("--config", o.config, "Key = value scenario file overriding the defaults")
                ->check(CLI::ExistingFile);
            sub->add_option("--seed", o.seed, "Master seed");
            sub->add_option("--slots", o.slots, "Slots (Monte Carlo samples) per campaign");
            sub->add_option("--users", o.users, "Number of users K");
            sub->add_option("--elements", o.elements, "Number of IRS elements M");
            sub->add_option("--subcarriers", o.subcarriers, "Number of subcarriers N");
            sub->add_option("--common-distance", o.common_distance,
                            "Place all users at this IRS distance (equal path loss), m");
            if (outputs)
            {
                sub->add_option("--out", o.out, "CSV output path");
                sub->add_option("--manifest", o.manifest, "JSON manifest path (default: <out>.json)");
            }
            sub->add_option("--threads", o.threads, "Worker threads, 0 = all cores");
        }

        Scenario load_scenario(const CommonOptions &o)
        {
            Scenario s;
            if (!o.config.empty())
                apply_config(s, read_config_file(o.config));
            if (o.seed)
                s.seed = *o.seed;
            if (o.slots)
                s.slots = *o.slots;
            if (o.users)
                s.users = *o.users;
            if (o.elements)
                s.params.elements = *o.elements;
            if (o.subcarriers)
                s.params.subcarriers = *o.subcarriers;
            if (o.common_distance)
                s.common_distance_m = *o.common_distance;
            s.validate();
            return s;
        }

        std::string utc_timestamp()
        {
            const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
            std::tm tm{};
            gmtime_r(&now, &tm);
            char buf[32];
            std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
            return buf;
        }

        fs::path default_output(const std::string &sweep)
        {
            const char *dir = std::getenv("BSPLIT_OUT_DIR");
            return fs::path(dir && *dir ? dir : ".") / (sweep + ".csv");
        }

        void emit(const ExperimentResult &res, const Scenario &scenario, const CommonOptions &o,
                  const std::vector<std::string> &argv, std::ostream &out)
        {
            const fs::path csv = o.out.empty() ? default_output(res.sweep) : fs::path(o.out);
            fs::path manifest = o.manifest.empty() ? fs::path(csv).replace_extension(".json") : fs::path(o.manifest);
            write_text_file(csv, to_csv(res));

            nlohmann::ordered_json j;
            j["tool"] = "bsplit";
            j["version"] = BSPLIT_VERSION;
            j["git_describe"] = BSPLIT_GIT_DESCRIBE;
            j["sweep"] = res.sweep;
            j["command"] = argv;
            j["seed"] = scenario.seed;
            j["scenario"] = scenario_to_config(scenario);
            j["parameters"] = res.parameters;
            j["csv"] = csv.string();
            j["rows"] = res.rows.size();
            j["created_utc"] = utc_timestamp();
            write_text_file(manifest, j.dump(2) + "\n");

            out << "wrote " << res.rows.size() << " rows to " << csv.string() << " (manifest " << manifest.string()
                << ")\n";
        }
    }

    int cli_main(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
    {
        CLI::App app{"Beam-split aware IRS/OFDMA downlink simulator", "bsplit"};
        app.require_subcommand(1);
        app.set_version_flag("--version", std::string(BSPLIT_VERSION) + " (" + BSPLIT_GIT_DESCRIBE + ")");

        CommonOptions common;

        auto *beam = app.add_subcommand("beam-split", "Gain vs. frequency with the IRS tuned to one frequency");
        std::vector<std::size_t> beam_ms{128, 256, 512, 1024};
        double f_tuned = 0.0;
        std::size_t phi_points = 2001;
        beam->add_option("--M", beam_ms, "Element counts")->delimiter(',');
        beam->add_option("--f-tuned", f_tuned, "Tuning frequency, Hz (baseband)");
        beam->add_option("--phi-points", phi_points, "Midpoint-rule points for the cascaded-angle average");
        add_common(beam, common, true);

        auto *avg = app.add_subcommand("avg-gain", "Average scheduled gain per subcarrier, three scenarios");
        add_common(avg, common, true);

        auto *se_k = app.add_subcommand("se-vs-users", "Spectral efficiency vs. number of users");
        std::vector<std::size_t> ks{10, 50, 100, 500, 1000, 5000};
        se_k->add_option("--K", ks, "User counts")->delimiter(',');
        add_common(se_k, common, true);

        auto *se_m = app.add_subcommand("se-vs-elements", "Spectral efficiency vs. number of IRS elements");
        std::vector<std::size_t> ms{32, 64, 128, 256, 512};
        se_m->add_option("--M", ms, "Element counts")->delimiter(',');
        add_common(se_m, common, true);

        auto *thm = app.add_subcommand("theorem1", "Every-subcarrier success probability: bound vs. Monte Carlo");
        double eps = 0.1;
        std::vector<std::size_t> thm_ks{2000, 5000, 10000, 20000};
        std::size_t trials = 500;
        std::size_t thm_m = 128;
        std::size_t thm_n = 32;
        std::optional<double> thm_delta;
        thm->add_option("--eps", eps, "Gain tolerance epsilon")->check(CLI::Range(0.0, 1.0));
        thm->add_option("--K", thm_ks, "User counts")->delimiter(',');
        thm->add_option("--trials", trials, "Monte Carlo trials per K");
        thm->add_option("--M", thm_m, "IRS elements");
        thm->add_option("--N", thm_n, "Subcarriers");
        thm->add_option("--delta", thm_delta, "Also evaluate K = k_min(eps, delta)");
        add_common(thm, common, true);

        auto *km = app.add_subcommand("kmin", "Minimum user count for full array gain on every subcarrier");
        double km_eps = 0.1;
        double km_delta = 0.05;
        std::optional<std::size_t> km_n, km_m;
        km->add_option("--eps", km_eps, "Gain tolerance epsilon");
        km->add_option("--delta", km_delta, "Failure probability delta");
        km->add_option("--N", km_n, "Subcarriers (default: scenario)");
        km->add_option("--M", km_m, "IRS elements (default: scenario)");
        add_common(km, common, false);

        auto *pr = app.add_subcommand("predict-rate", "Closed-form max-rate throughput prediction");
        std::optional<double> pr_k;
        pr->add_option("--K", pr_k, "Number of users (default: scenario)");
        add_common(pr, common, false);

        auto *self = app.add_subcommand("selftest", "Run the built-in invariant checks");

        std::vector<std::string> args(argv, argv + argc);
        try
        {
            app.parse(argc, argv);
        }
        catch (const CLI::CallForHelp &e)
        {
            out << app.help();
            return 0;
        }
        catch (const CLI::CallForVersion &e)
        {
            out << e.what() << "\n";
            return 0;
        }
        catch (const CLI::ParseError &e)
        {
            err << "error: " << e.what() << "\n\n" << app.help();
            return 2;
        }

        try
        {
            if (*self)
                return run_selftest(out) ? 0 : 1;

            const Scenario scenario = load_scenario(common);
            const unsigned workers = common.threads;

            if (*beam)
                emit(exp_beam_split(beam_ms, scenario.params, f_tuned, phi_points), scenario, common, args, out);
            else if (*avg)
                emit(exp_avg_gain(scenario, workers), scenario, common, args, out);
            else if (*se_k)
                emit(exp_se_vs_users(ks, scenario, workers), scenario, common, args, out);
            else if (*se_m)
                emit(exp_se_vs_elements(ms, scenario, workers), scenario, common, args, out);
            else if (*thm)
            {
                SuccessScenario base;
                base.subcarriers = thm_n;
                base.elements = thm_m;
                base.bandwidth_hz = scenario.params.bandwidth_hz;
                base.carrier_hz = scenario.params.carrier_hz;
                emit(exp_theorem1(eps, thm_ks, base, trials, scenario.seed, thm_delta, workers), scenario, common, args,
                     out);
            }
            else if (*km)
            {
                const std::size_t n = km_n.value_or(scenario.params.subcarriers);
                const std::size_t m = km_m.value_or(scenario.params.elements);
                const double w = scenario.params.bandwidth_hz;
                const double fc = scenario.params.carrier_hz;
                const std::uint64_t k = k_min(km_eps, km_delta, n, m, w, fc);
                out << "k_min = " << k << "\n"
                    << "k_min_real = " << format_number(k_min_real(km_eps, km_delta, n, m, w, fc)) << "\n"
                    << "bound_at_k_min = "
                    << format_number(success_probability_bound(km_eps, n, static_cast<double>(k), m, w, fc)) << "\n"
                    << "eps = " << format_number(km_eps) << "\n"
                    << "delta = " << format_number(km_delta) << "\n"
                    << "subcarriers = " << n << "\n"
                    << "elements = " << m << "\n"
                    << "bandwidth_hz = " << format_number(w) << "\n"
                    << "carrier_hz = " << format_number(fc) << "\n";
            }
            else if (*pr)
            {
                const auto &p = scenario.params;
                const double K = pr_k.value_or(static_cast<double>(scenario.users));
                const double rho = scenario.reference_pathloss();
                const double r = predicted_throughput(K, p.elements, p.subcarriers, p.bandwidth_hz, rho, p.gain_tx,
                                                      p.gain_rx, p.power_w, p.noise_w);
                out << "throughput_bps = " << format_number(r) << "\n"
                    << "se_bps_hz = " << format_number(r / p.bandwidth_hz) << "\n"
                    << "users = " << format_number(K) << "\n"
                    << "elements = " << p.elements << "\n"
                    << "rho = " << format_number(rho) << "\n"
                    << "l_K = " << format_number(lk_approximation(K)) << "\n";
            }
            return 0;
        }
        catch (const ConfigError &e)
        {
            err << "configuration error: " << e.what() << "\n";
            return 2;
        }
        catch (const std::exception &e)
        {
            err << "error: " << e.what() << "\n";
            return 1;
        }
    }
}
