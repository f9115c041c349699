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

// Command-line front end: run | snapshot | oracle | validate-config

#include "offshore/audit.hpp"
#include "offshore/harness.hpp"
#include "offshore/records_io.hpp"
#include "offshore/sim_config.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

using namespace offshore;

namespace
{
    constexpr int exit_config_error = 2;
    constexpr int exit_runtime_error = 1;

    struct CommonOptions
    {
        std::string config_path;
        std::optional<std::uint64_t> seed;
        std::optional<std::string> out_dir;
        std::vector<std::string> schemes;
        std::optional<std::size_t> snapshots;
        std::optional<unsigned> threads;
    };

    void add_common(CLI::App *cmd, CommonOptions &opt)
    {
        cmd->add_option("-c,--config", opt.config_path, "JSON config file (defaults apply when omitted)")
            ->check(CLI::ExistingFile);
        cmd->add_option("--seed", opt.seed, "Override experiment.master_seed");
        cmd->add_option("-o,--out", opt.out_dir, "Override output.dir");
        cmd->add_option("--schemes", opt.schemes, "Scheme subset (rra_ris_al1, fdaa_only, fdaa_ris_al1, rra_only)")
            ->delimiter(',');
        cmd->add_option("-n,--snapshots", opt.snapshots, "Override experiment.n_snapshots");
        cmd->add_option("-j,--threads", opt.threads, "Override experiment.threads");
    }

    SimConfig resolve_config(const CommonOptions &opt)
    {
        SimConfig cfg = opt.config_path.empty() ? SimConfig{} : load_config(opt.config_path);
        if (opt.seed)
            cfg.master_seed = *opt.seed;
        if (opt.out_dir)
            cfg.output_dir = *opt.out_dir;
        if (opt.snapshots)
            cfg.n_snapshots = *opt.snapshots;
        if (opt.threads)
            cfg.threads = *opt.threads;
        if (!opt.schemes.empty())
        {
            cfg.schemes.clear();
            for (const std::string &name : opt.schemes)
            {
                const auto id = parse_scheme(name);
                if (!id)
                    throw ConfigError("unknown scheme '" + name + "'");
                cfg.schemes.push_back(*id);
            }
        }
        cfg.validate();
        return cfg;
    }

    int cmd_run(const CommonOptions &opt, bool quiet)
    {
        const SimConfig cfg = resolve_config(opt);
        ProgressCallback progress;
        if (!quiet)
            progress = [](std::size_t done, std::size_t total) {
                if (done == total || done % 50 == 0)
                    std::cerr << "\rsnapshots " << done << "/" << total << (done == total ? "\n" : "") << std::flush;
            };

        const SweepResult result = power_sweep(cfg, progress);
        const auto written = write_sweep_outputs(cfg.output_dir, result, cfg);

        for (const SchemeMetrics &m : result.metrics)
        {
            std::cout << scheme_name(m.scheme) << " @ " << format_number(m.power_dbm) << " dBm: SR " << m.sr
                      << ", mean ESR ";
            if (m.mean_esr)
                std::cout << *m.mean_esr << " bits/s/Hz";
            else
                std::cout << "n/a";
            std::cout << " (" << m.n_feasible << "/" << m.n_total << ")\n";
        }
        for (const std::string &d : result.diagnostics)
            std::cerr << "trend warning: " << d << '\n';
        for (const auto &p : written)
            std::cerr << "wrote " << p.string() << '\n';
        return 0;
    }

    int cmd_snapshot(const CommonOptions &opt, std::size_t index, std::optional<double> power)
    {
        const SimConfig cfg = resolve_config(opt);
        const double p = power.value_or(cfg.power_dbm.front());
        const SnapshotRecord rec = run_snapshot(cfg, p, index);
        std::cout << snapshot_json(rec) << '\n';

        std::cerr << "snapshot " << index << " seed " << rec.seed << " at " << format_number(p) << " dBm\n";
        for (std::size_t k = 0; k < rec.vessels.size(); ++k)
        {
            const Point2 &v = rec.vessels[k];
            std::cerr << "  vessel " << k << " at (" << v.x << ", " << v.y << ") m, floor " << rec.rate_floors[k]
                      << " bits/s/Hz, direct " << distance(cfg.bs_position, v) << " m, via RIS "
                      << distance(cfg.bs_position, cfg.ris_position) + distance(cfg.ris_position, v) << " m\n";
        }
        for (const SchemeRecord &s : rec.schemes)
        {
            std::cerr << "  " << scheme_name(s.scheme) << ": ";
            if (!s.error.empty())
                std::cerr << "error: " << s.error << '\n';
            else
                std::cerr << (s.feasible ? "feasible" : "infeasible") << ", ESR " << s.esr << '\n';
        }
        return 0;
    }

    int cmd_oracle(std::size_t instances, unsigned n, unsigned m, unsigned levels, std::uint64_t seed,
                   const std::string &out_path)
    {
        oracle::GridSpec grid;
        grid.phase_levels = levels;
        const AuditSummary s = audit_ascent_against_grid(instances, n, m, grid, SolverConfig{}, seed);

        if (out_path.empty() || out_path == "-")
            write_audit_csv(std::cout, s);
        else
        {
            std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
            if (!out)
                throw std::runtime_error("cannot write '" + out_path + "'");
            write_audit_csv(out, s);
        }
        std::cerr << "instances " << instances << ", N=" << n << ", M=" << m << ", L=" << levels << ": min ratio "
                  << s.min_ratio << ", median " << s.median_ratio << ", share >= " << s.threshold << ": "
                  << s.fraction_at_least << '\n';
        return 0;
    }

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Offshore RIS downlink simulator"};
    app.require_subcommand(1);

    CommonOptions run_opt;
    bool quiet = false;
    auto *run = app.add_subcommand("run", "Full power sweep; writes CSV and JSONL outputs");
    add_common(run, run_opt);
    run->add_flag("-q,--quiet", quiet, "No progress output");

    CommonOptions snap_opt;
    std::size_t snap_index = 0;
    std::optional<double> snap_power;
    auto *snap = app.add_subcommand("snapshot", "Run one snapshot and print its record");
    add_common(snap, snap_opt);
    snap->add_option("-i,--index", snap_index, "Snapshot index");
    snap->add_option("-p,--power", snap_power, "Transmit power in dBm (default: first sweep point)");

    std::size_t oracle_instances = 200;
    unsigned oracle_n = 2, oracle_m = 3, oracle_levels = 16;
    std::uint64_t oracle_seed = 1;
    std::string oracle_out;
    auto *orc = app.add_subcommand("oracle", "Compare alternating ascent with the exhaustive phase grid");
    orc->add_option("--instances", oracle_instances, "Number of random instances")->check(CLI::PositiveNumber);
    orc->add_option("--n", oracle_n, "Array elements N")->check(CLI::PositiveNumber);
    orc->add_option("--m", oracle_m, "RIS elements M")->check(CLI::PositiveNumber);
    orc->add_option("--levels", oracle_levels, "Phase levels L")->check(CLI::Range(2u, 1024u));
    orc->add_option("--seed", oracle_seed, "First instance seed");
    orc->add_option("-o,--out", oracle_out, "CSV path (stdout when omitted)");

    std::string validate_path;
    auto *val = app.add_subcommand("validate-config", "Parse a config file and print it with defaults filled in");
    val->add_option("config", validate_path, "JSON config file")->required();

    CLI11_PARSE(app, argc, argv);

    try
    {
        if (*run)
            return cmd_run(run_opt, quiet);
        if (*snap)
            return cmd_snapshot(snap_opt, snap_index, snap_power);
        if (*orc)
            return cmd_oracle(oracle_instances, oracle_n, oracle_m, oracle_levels, oracle_seed, oracle_out);
        if (*val)
        {
            std::cout << dump_config(load_config(validate_path)) << '\n';
            return 0;
        }
    }
    catch (const ConfigError &e)
    {
        std::cerr << "config error: " << e.what() << '\n';
        return exit_config_error;
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return exit_runtime_error;
    }
    return 0;
}
