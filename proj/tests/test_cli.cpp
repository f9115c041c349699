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


// Exercises the offshore_sim executable end to end

#include "catch_amalgamated.hpp"

#include "json.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace fs = std::filesystem;

namespace
{
    struct Result
    {
        int code = -1;
        std::string out;
    };

    // Runs the simulator with stderr discarded and stdout captured
    Result sim(const std::string &args)
    {
        const std::string cmd = std::string("\"") + OFFSHORE_SIM_PATH + "\" " + args + " 2>/dev/null";
        Result r;
        FILE *pipe = popen(cmd.c_str(), "r");
        REQUIRE(pipe != nullptr);
        char buf[4096];
        std::size_t n;
        while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0)
            r.out.append(buf, n);
        const int status = pclose(pipe);
        r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
        return r;
    }

    fs::path scratch(const std::string &name)
    {
        const fs::path p = fs::temp_directory_path() / ("offshore_ris_cli_" + name);
        fs::remove_all(p);
        return p;
    }

    void write_file(const fs::path &p, const std::string &text)
    {
        std::ofstream out(p);
        out << text;
    }

    std::string slurp(const fs::path &p)
    {
        std::ifstream in(p, std::ios::binary);
        std::stringstream buf;
        buf << in.rdbuf();
        return buf.str();
    }
} // namespace

TEST_CASE("a subcommand is required", "[cli]")
{
    CHECK(sim("").code != 0);
    CHECK(sim("frobnicate").code != 0);
}

TEST_CASE("validate-config prints the resolved configuration", "[cli]")
{
    const fs::path cfg = scratch("good.json");
    write_file(cfg, R"({"experiment": {"n_snapshots": 3}})");
    const Result r = sim("validate-config " + cfg.string());
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["experiment"]["n_snapshots"] == 3);
    CHECK(j["scenario"]["num_vessels"] == 4);
    fs::remove(cfg);
}

TEST_CASE("config errors exit with status 2", "[cli]")
{
    const fs::path cfg = scratch("bad.json");
    write_file(cfg, R"({"experiment": {"n_snapshot": 3}})");
    CHECK(sim("validate-config " + cfg.string()).code == 2);
    CHECK(sim("validate-config " + (fs::temp_directory_path() / "offshore_ris_missing.json").string()).code == 2);
    CHECK(sim("run -q -n 1 --schemes best -o " + scratch("bad_out").string()).code == 2);
    fs::remove(cfg);
}

TEST_CASE("run writes the sweep outputs", "[cli]")
{
    const fs::path out = scratch("run");
    const Result r = sim("run -q -n 2 --schemes rra_ris_al1,rra_only -o " + out.string());
    REQUIRE(r.code == 0);
    CHECK(r.out.find("rra_ris_al1 @ 45 dBm") != std::string::npos);
    CHECK(fs::exists(out / "esr_vs_power.csv"));
    CHECK(fs::exists(out / "snapshots.jsonl"));
    for (int p : {35, 40, 45, 50, 55})
        CHECK(fs::exists(out / ("cdf_" + std::to_string(p) + "dbm.csv")));
    const std::string table = slurp(out / "esr_vs_power.csv");
    CHECK(table.rfind("scheme,power_dbm,sr,mean_esr,n_feasible,n_total,mean_esr_bps\n", 0) == 0);
    CHECK(table.find("fdaa_only") == std::string::npos);
    fs::remove_all(out);
}

TEST_CASE("repeated runs are byte-identical", "[cli]")
{
    const fs::path a = scratch("det_a"), b = scratch("det_b");
    REQUIRE(sim("run -q -n 3 --seed 7 -o " + a.string()).code == 0);
    REQUIRE(sim("run -q -n 3 --seed 7 -j 2 -o " + b.string()).code == 0);
    for (const auto &entry : fs::directory_iterator(a))
        CHECK(slurp(entry.path()) == slurp(b / entry.path().filename()));

    const fs::path c = scratch("det_c");
    REQUIRE(sim("run -q -n 3 --seed 8 -o " + c.string()).code == 0);
    CHECK(slurp(a / "snapshots.jsonl") != slurp(c / "snapshots.jsonl"));
    for (const auto &d : {a, b, c})
        fs::remove_all(d);
}

TEST_CASE("snapshot prints one JSON record", "[cli]")
{
    const Result r = sim("snapshot -i 1 -p 50");
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["index"] == 1);
    CHECK(j["power_dbm"] == 50.0);
    CHECK(j["schemes"].size() == 4);
}

TEST_CASE("oracle audit CSV", "[cli]")
{
    const Result r = sim("oracle --instances 4 --levels 8");
    REQUIRE(r.code == 0);
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line);
    CHECK(line == "seed,ascent_objective,grid_objective,ratio");
    int rows = 0;
    while (std::getline(in, line))
        ++rows;
    CHECK(rows == 4);
}
