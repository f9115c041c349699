// SPDX-License-Identifier: Apache-2.0
//
// offshore-ris: link-level simulation and beamforming for RIS-aided offshore downlinks
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


#include "offshore/sim_config.hpp"

#include "catch_amalgamated.hpp"

#include "json.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>

using namespace offshore;
using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("default configuration describes the reference scenario", "[config]")
{
    const SimConfig cfg;
    CHECK_NOTHROW(cfg.validate());
    CHECK(cfg.num_vessels == 4);
    CHECK(cfg.bs_array().size() == 64);
    CHECK(cfg.ris_array().size() == 64);
    CHECK(cfg.n_snapshots == 500);
    CHECK(cfg.power_dbm == std::vector<double>{35.0, 40.0, 45.0, 50.0, 55.0});
    CHECK(cfg.schemes.size() == 4);
    CHECK_THAT(cfg.wavelength(), WithinRel(0.05168835482758621, 1e-15));
    CHECK_THAT(cfg.element_spacing(), WithinRel(0.5 * 0.05168835482758621, 1e-15));
    CHECK_THAT(cfg.noise_power(), WithinRel(2e-13, 1e-12));
    CHECK_THAT(cfg.rician().factor, WithinRel(10.0, 1e-12));
    // Feed on the aperture normal at sqrt(N) element spacings
    CHECK_THAT(cfg.feed().feed_height, WithinRel(8.0 * cfg.element_spacing(), 1e-15));
    CHECK(cfg.feed().pattern_exponent == 6.5);
}

TEST_CASE("empty object keeps every default", "[config]")
{
    const SimConfig cfg = parse_config("{}");
    CHECK(dump_config(cfg) == dump_config(SimConfig{}));
}

TEST_CASE("config overrides", "[config]")
{
    const SimConfig cfg = parse_config(R"({
        "scenario": {"ris_position_m": [8000, 500], "num_vessels": 3, "l_max_m": 20000},
        "arrays": {"bs": {"n_h": 4, "n_v": 2}, "ris": {"n_h": 6}},
        "feed": {"height_m": 0.2},
        "channel": {"rician_factor_db": 0},
        "solver": {"max_outer": 10},
        "experiment": {"power_dbm": [30, 32.5], "n_snapshots": 7, "master_seed": 18446744073709551615,
                       "schemes": ["fdaa_only", "rra_ris_al1"], "threads": 2},
        "output": {"dir": "out/x"}
    })");
    CHECK(cfg.ris_position.x == 8000.0);
    CHECK(cfg.ris_position.y == 500.0);
    CHECK(cfg.num_vessels == 3);
    CHECK(cfg.l_max == 20000.0);
    CHECK(cfg.bs_array().size() == 8);
    CHECK(cfg.ris_n_h == 6);
    CHECK(cfg.ris_n_v == 8);
    REQUIRE(cfg.feed_height);
    CHECK(cfg.feed().feed_height == 0.2);
    CHECK_THAT(cfg.rician().factor, WithinRel(1.0, 1e-15));
    CHECK(cfg.solver.max_outer == 10);
    CHECK(cfg.power_dbm == std::vector<double>{30.0, 32.5});
    CHECK(cfg.n_snapshots == 7);
    CHECK(cfg.master_seed == 18446744073709551615ull);
    CHECK(cfg.schemes == std::vector<SchemeId>{SchemeId::FdaaOnlyOptimal, SchemeId::RraRisAl1});
    CHECK(cfg.threads == 2);
    CHECK(cfg.output_dir == "out/x");
}

TEST_CASE("dump and parse round-trip", "[config]")
{
    SimConfig cfg;
    cfg.feed_height = 0.123;
    cfg.power_dbm = {41.0};
    cfg.master_seed = 99;
    cfg.schemes = {SchemeId::RraOnlyOptimal};
    const std::string text = dump_config(cfg);
    CHECK(dump_config(parse_config(text)) == text);
}

TEST_CASE("config errors", "[config]")
{
    auto rejects = [](const std::string &text, const std::string &fragment) {
        CHECK_THROWS_MATCHES(parse_config(text), ConfigError, Catch::Matchers::MessageMatches(ContainsSubstring(fragment)));
    };
    rejects("{", "not valid JSON");
    rejects("[]", "must be an object");
    rejects(R"({"scenaria": {}})", "unknown key 'scenaria'");
    rejects(R"({"scenario": {"h_bs": 50}})", "unknown key 'scenario.h_bs'");
    rejects(R"({"arrays": {"bs": {"n_x": 2}}})", "unknown key 'arrays.bs.n_x'");
    rejects(R"({"scenario": {"h_bs_m": "tall"}})", "scenario.h_bs_m must be a number");
    rejects(R"({"scenario": {"num_vessels": -1}})", "non-negative integer");
    rejects(R"({"scenario": {"num_vessels": 2.5}})", "non-negative integer");
    rejects(R"({"scenario": {"num_vessels": 0}})", "num_vessels must be at least 1");
    rejects(R"({"scenario": {"bs_position_m": [1]}})", "two-element");
    rejects(R"({"scenario": {"h_ris_m": 0}})", "heights must be positive");
    rejects(R"({"arrays": {"bs": {"n_h": 4294967296}}})", "out of range");
    rejects(R"({"experiment": {"power_dbm": []}})", "power_dbm must not be empty");
    rejects(R"({"experiment": {"power_dbm": 45}})", "array of numbers");
    rejects(R"({"experiment": {"schemes": ["best"]}})", "unknown scheme 'best'");
    rejects(R"({"experiment": {"schemes": []}})", "schemes must not be empty");
    rejects(R"({"experiment": {"n_snapshots": 0}})", "n_snapshots");
    rejects(R"({"solver": {"inner_tolerance": 0}})", "solver:");
    rejects(R"({"feed": {"height_m": -1}})", "feed.height_m");
    rejects(R"({"output": {"dir": 3}})", "output.dir must be a string");
}

TEST_CASE("config files", "[config]")
{
    const auto path = std::filesystem::temp_directory_path() / "offshore_ris_test_config.json";
    {
        std::ofstream out(path);
        out << R"({"experiment": {"n_snapshots": 12}})";
    }
    CHECK(load_config(path.string()).n_snapshots == 12);
    std::filesystem::remove(path);
    CHECK_THROWS_AS(load_config(path.string()), ConfigError);
}
