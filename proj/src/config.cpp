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

#include "bsplit/errors.hpp"
#include "bsplit/experiments.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>
#include <system_error>

namespace bsplit
{
    std::string format_number(double v)
    {
        if (std::isnan(v))
            return "nan";
        if (std::isinf(v))
            return v > 0 ? "inf" : "-inf";
        std::array<char, 64> buf{};
        const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
        return std::string(buf.data(), res.ptr);
    }

    namespace
    {
        std::string trim(std::string_view s)
        {
            const auto b = s.find_first_not_of(" \t\r");
            if (b == std::string_view::npos)
                return {};
            const auto e = s.find_last_not_of(" \t\r");
            return std::string(s.substr(b, e - b + 1));
        }

        double parse_double(const std::string &key, const std::string &v)
        {
            double out = 0.0;
            const auto res = std::from_chars(v.data(), v.data() + v.size(), out);
            if (res.ec != std::errc() || res.ptr != v.data() + v.size() || !std::isfinite(out))
                throw ConfigError("config key '" + key + "': expected a number, got '" + v + "'");
            return out;
        }

        std::uint64_t parse_uint(const std::string &key, const std::string &v)
        {
            std::uint64_t out = 0;
            const auto res = std::from_chars(v.data(), v.data() + v.size(), out);
            if (res.ec != std::errc() || res.ptr != v.data() + v.size())
                throw ConfigError("config key '" + key + "': expected a non-negative integer, got '" + v + "'");
            return out;
        }

        bool parse_bool(const std::string &key, const std::string &v)
        {
            if (v == "on" || v == "true" || v == "1" || v == "yes")
                return true;
            if (v == "off" || v == "false" || v == "0" || v == "no")
                return false;
            throw ConfigError("config key '" + key + "': expected on/off, got '" + v + "'");
        }
    }

    ConfigMap parse_config_text(const std::string &text)
    {
        ConfigMap out;
        std::istringstream in(text);
        std::string line;
        std::size_t line_no = 0;
        while (std::getline(in, line))
        {
            ++line_no;
            if (const auto hash = line.find('#'); hash != std::string::npos)
                line.erase(hash);
            const std::string body = trim(line);
            if (body.empty())
                continue;
            const auto eq = body.find('=');
            if (eq == std::string::npos)
                throw ConfigError("config line " + std::to_string(line_no) + ": expected 'key = value'");
            std::string key = trim(std::string_view(body).substr(0, eq));
            std::string value = trim(std::string_view(body).substr(eq + 1));
            if (key.empty() || value.empty())
                throw ConfigError("config line " + std::to_string(line_no) + ": empty key or value");
            out[key] = value;
        }
        return out;
    }

    ConfigMap read_config_file(const std::filesystem::path &path)
    {
        std::ifstream f(path, std::ios::binary);
        if (!f)
            throw ConfigError("cannot read config file " + path.string());
        std::ostringstream ss;
        ss << f.rdbuf();
        return parse_config_text(ss.str());
    }

    void apply_config(Scenario &s, const ConfigMap &config)
    {
        using Setter = std::function<void(const std::string &, const std::string &)>;
        const std::map<std::string, Setter> setters = {
            {"carrier_hz", [&](auto &k, auto &v) { s.params.carrier_hz = parse_double(k, v); }},
            {"bandwidth_hz", [&](auto &k, auto &v) { s.params.bandwidth_hz = parse_double(k, v); }},
            {"subcarriers", [&](auto &k, auto &v) { s.params.subcarriers = parse_uint(k, v); }},
            {"elements", [&](auto &k, auto &v) { s.params.elements = parse_uint(k, v); }},
            {"spacing_m", [&](auto &k, auto &v) { s.params.spacing_m = parse_double(k, v); }},
            {"power_w", [&](auto &k, auto &v) { s.params.power_w = parse_double(k, v); }},
            {"power_dbm", [&](auto &k, auto &v) { s.params.power_w = dbm_to_watt(parse_double(k, v)); }},
            {"noise_w", [&](auto &k, auto &v) { s.params.noise_w = parse_double(k, v); }},
            {"noise_dbm", [&](auto &k, auto &v) { s.params.noise_w = dbm_to_watt(parse_double(k, v)); }},
            {"gain_tx", [&](auto &k, auto &v) { s.params.gain_tx = parse_double(k, v); }},
            {"gain_tx_dbi", [&](auto &k, auto &v) { s.params.gain_tx = db_to_linear(parse_double(k, v)); }},
            {"gain_rx", [&](auto &k, auto &v) { s.params.gain_rx = parse_double(k, v); }},
            {"gain_rx_dbi", [&](auto &k, auto &v) { s.params.gain_rx = db_to_linear(parse_double(k, v)); }},
            {"bs_x_m", [&](auto &k, auto &v) { s.params.bs.x = parse_double(k, v); }},
            {"bs_y_m", [&](auto &k, auto &v) { s.params.bs.y = parse_double(k, v); }},
            {"irs_x_m", [&](auto &k, auto &v) { s.params.irs.x = parse_double(k, v); }},
            {"irs_y_m", [&](auto &k, auto &v) { s.params.irs.y = parse_double(k, v); }},
            {"users", [&](auto &k, auto &v) { s.users = parse_uint(k, v); }},
            {"inner_radius_m", [&](auto &k, auto &v) { s.geometry.inner_radius_m = parse_double(k, v); }},
            {"outer_radius_m", [&](auto &k, auto &v) { s.geometry.outer_radius_m = parse_double(k, v); }},
            {"pathloss_exp_bs_irs", [&](auto &k, auto &v) { s.geometry.pathloss_exp_bs_irs = parse_double(k, v); }},
            {"pathloss_exp_irs_ue", [&](auto &k, auto &v) { s.geometry.pathloss_exp_irs_ue = parse_double(k, v); }},
            {"uniform_delay_s", [&](auto &k, auto &v) { s.geometry.uniform_delay_s = parse_double(k, v); }},
            {"angle_mode",
             [&](auto &k, auto &v)
             {
                 if (v == "uniform")
                     s.geometry.angle_mode = AngleMode::uniform_cascaded;
                 else if (v == "geometric")
                     s.geometry.angle_mode = AngleMode::geometric;
                 else
                     throw ConfigError("config key '" + k + "': expected uniform or geometric");
             }},
            {"fading", [&](auto &k, auto &v) { s.fading = parse_bool(k, v); }},
            {"scheduler",
             [&](auto &k, auto &v)
             {
                 if (v == "max-rate")
                     s.scheduler = SchedulerKind::max_rate;
                 else if (v == "round-robin")
                     s.scheduler = SchedulerKind::round_robin;
                 else
                     throw ConfigError("config key '" + k + "': expected max-rate or round-robin");
             }},
            {"slots", [&](auto &k, auto &v) { s.slots = parse_uint(k, v); }},
            {"seed", [&](auto &k, auto &v) { s.seed = parse_uint(k, v); }},
            {"rr_tuning_hz", [&](auto &k, auto &v) { s.rr_tuning_hz = parse_double(k, v); }},
            {"common_distance_m", [&](auto &k, auto &v) { s.common_distance_m = parse_double(k, v); }},
        };

        for (const auto &[key, value] : config)
        {
            const auto it = setters.find(key);
            if (it == setters.end())
                throw ConfigError("unknown config key '" + key + "'");
            it->second(key, value);
        }
        s.validate();
    }

    ConfigMap scenario_to_config(const Scenario &s)
    {
        const auto f = format_number;
        return {
            {"carrier_hz", f(s.params.carrier_hz)},
            {"bandwidth_hz", f(s.params.bandwidth_hz)},
            {"subcarriers", std::to_string(s.params.subcarriers)},
            {"elements", std::to_string(s.params.elements)},
            {"spacing_m", f(s.params.spacing_m)},
            {"power_w", f(s.params.power_w)},
            {"noise_w", f(s.params.noise_w)},
            {"gain_tx", f(s.params.gain_tx)},
            {"gain_rx", f(s.params.gain_rx)},
            {"bs_x_m", f(s.params.bs.x)},
            {"bs_y_m", f(s.params.bs.y)},
            {"irs_x_m", f(s.params.irs.x)},
            {"irs_y_m", f(s.params.irs.y)},
            {"users", std::to_string(s.users)},
            {"inner_radius_m", f(s.geometry.inner_radius_m)},
            {"outer_radius_m", f(s.geometry.outer_radius_m)},
            {"pathloss_exp_bs_irs", f(s.geometry.pathloss_exp_bs_irs)},
            {"pathloss_exp_irs_ue", f(s.geometry.pathloss_exp_irs_ue)},
            {"uniform_delay_s", f(s.geometry.uniform_delay_s)},
            {"angle_mode", std::string(angle_mode_name(s.geometry.angle_mode))},
            {"fading", s.fading ? "on" : "off"},
            {"scheduler", std::string(scheduler_name(s.scheduler))},
            {"slots", std::to_string(s.slots)},
            {"seed", std::to_string(s.seed)},
            {"rr_tuning_hz", f(s.rr_tuning_hz)},
            {"common_distance_m", f(s.common_distance_m)},
        };
    }

    std::string config_to_text(const ConfigMap &config)
    {
        std::string out;
        for (const auto &[k, v] : config)
            out += k + " = " + v + "\n";
        return out;
    }
}
