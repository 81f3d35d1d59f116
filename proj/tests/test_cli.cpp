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

#include <doctest.h>

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

namespace
{
    struct Run
    {
        int code;
        std::string out, err;
    };

    Run run(std::vector<std::string> args)
    {
        args.insert(args.begin(), "bsplit");
        std::vector<const char *> argv;
        for (const auto &a : args)
            argv.push_back(a.c_str());
        std::ostringstream o, e;
        const int c = bsplit::cli_main(static_cast<int>(argv.size()), argv.data(), o, e);
        return {c, o.str(), e.str()};
    }

    std::string slurp(const std::filesystem::path &p)
    {
        std::ifstream f(p, std::ios::binary);
        return {std::istreambuf_iterator<char>(f), {}};
    }

    std::filesystem::path scratch(const std::string &name)
    {
        auto d = std::filesystem::temp_directory_path() / "bsplit_cli_tests";
        std::filesystem::create_directories(d);
        return d / name;
    }
}

TEST_SUITE("cli")
{
    TEST_CASE("help and usage errors")
    {
        CHECK(run({"--help"}).code == 0);
        CHECK(run({}).code == 2);
        CHECK(run({"no-such-command"}).code == 2);
        CHECK(run({"kmin", "--eps", "abc"}).code == 2);
        const auto r = run({"se-vs-users", "--bogus"});
        CHECK(r.code == 2);
        CHECK(r.err.find("--bogus") != std::string::npos);
    }

    TEST_CASE("kmin prints the count and its inputs")
    {
        const auto r = run({"kmin", "--eps", "0.1", "--delta", "0.05"});
        CHECK(r.code == 0);
        CHECK(r.out.find("k_min = 23239") != std::string::npos);
        CHECK(r.out.find("delta = 0.05") != std::string::npos);
        CHECK(r.out.find("subcarriers = 128") != std::string::npos);
        CHECK(run({"kmin", "--delta", "1.5"}).code == 2);
    }

    TEST_CASE("bad config values are configuration errors")
    {
        const auto cfg = scratch("bad.cfg");
        std::ofstream(cfg) << "elements = 0\n";
        CHECK(run({"avg-gain", "--config", cfg.string()}).code == 2);
        std::ofstream(cfg) << "wat\n";
        CHECK(run({"avg-gain", "--config", cfg.string()}).code == 2);
        CHECK(run({"avg-gain", "--users", "0"}).code == 2);
    }

    TEST_CASE("sweep writes csv and manifest")
    {
        const auto csv = scratch("users.csv");
        const auto r = run({"se-vs-users", "--K", "2,4", "--slots", "5", "--elements", "16", "--subcarriers", "4",
                            "--out", csv.string()});
        REQUIRE(r.code == 0);
        const auto text = slurp(csv);
        CHECK(text.rfind("scenario,K,metric,value,stderr\n", 0) == 0);
        const auto j = nlohmann::json::parse(slurp(std::filesystem::path(csv).replace_extension(".json")));
        CHECK(j["sweep"] == "se-vs-users");
        CHECK(j["scenario"]["elements"] == "16");
        CHECK(j.contains("created_utc"));
        CHECK(j.contains("git_describe"));
        CHECK(j["rows"].get<std::size_t>() + 1 == static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n')));

        // same seed and config, different thread counts: same bytes
        const auto csv8 = scratch("users8.csv");
        REQUIRE(run({"se-vs-users", "--K", "2,4", "--slots", "5", "--elements", "16", "--subcarriers", "4",
                     "--threads", "8", "--out", csv8.string()})
                    .code == 0);
        CHECK(slurp(csv8) == text);
    }

    TEST_CASE("theorem1 and predict-rate")
    {
        const auto csv = scratch("thm.csv");
        const auto r = run({"theorem1", "--eps", "0.2", "--K", "100", "--trials", "10", "--M", "16", "--N", "4",
                            "--delta", "0.2", "--out", csv.string()});
        CHECK(r.code == 0);
        CHECK(slurp(csv).find(",k_min,") != std::string::npos);
        const auto p = run({"predict-rate", "--K", "5000"});
        CHECK(p.code == 0);
        CHECK(p.out.find("throughput_bps = ") != std::string::npos);
        CHECK(run({"predict-rate", "--K", "1"}).code == 1);
    }
}
