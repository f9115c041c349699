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

#include "offshore/records_io.hpp"

#include "json.hpp"

#include <charconv>
#include <cstdio>
#include <cmath>
#include <fstream>
#include <set>
#include <stdexcept>

using json = nlohmann::json;

namespace offshore
{
    std::string format_number(double value)
    {
        char buf[64];
        const auto res = std::to_chars(buf, buf + sizeof(buf), value);
        if (res.ec != std::errc())
            throw std::runtime_error("format_number: conversion failed");
        return std::string(buf, res.ptr);
    }

    std::string cdf_file_name(double power_dbm)
    {
        return "cdf_" + format_number(power_dbm) + "dbm.csv";
    }

    void write_esr_csv(std::ostream &out, std::span<const SchemeMetrics> metrics, double bandwidth_hz)
    {
        out << esr_csv_header << '\n';
        for (const SchemeMetrics &m : metrics)
        {
            out << scheme_name(m.scheme) << ',' << format_number(m.power_dbm) << ',' << format_number(m.sr) << ',';
            if (m.mean_esr)
                out << format_number(*m.mean_esr);
            out << ',' << m.n_feasible << ',' << m.n_total << ',';
            if (m.mean_esr)
                out << format_number(*m.mean_esr * bandwidth_hz);
            out << '\n';
        }
    }

    void write_cdf_csv(std::ostream &out, std::span<const SchemeMetrics> metrics, double power_dbm)
    {
        out << cdf_csv_header << '\n';
        for (const SchemeMetrics &m : metrics)
        {
            if (m.power_dbm != power_dbm)
                continue;
            for (double v : m.esr_samples)
                out << scheme_name(m.scheme) << ',' << format_number(v) << '\n';
        }
    }

    std::string snapshot_json(const SnapshotRecord &record)
    {
        json vessels = json::array();
        for (const Point2 &p : record.vessels)
            vessels.push_back({p.x, p.y});

        json schemes = json::array();
        for (const SchemeRecord &s : record.schemes)
        {
            json entry = {{"scheme", std::string(scheme_name(s.scheme))},
                          {"supported", s.supported},
                          {"feasible", s.feasible},
                          {"esr", s.esr},
                          {"rates", s.rates},
                          {"time_share", s.time_share},
                          {"outer_iterations", s.outer_iterations}};
            if (!s.error.empty())
                entry["error"] = s.error;
            schemes.push_back(std::move(entry));
        }

        char hash[17];
        std::snprintf(hash, sizeof(hash), "%016llx", static_cast<unsigned long long>(record.channel_hash));

        json obj = {{"index", record.index},
                    {"seed", record.seed},
                    {"power_dbm", record.power_dbm},
                    {"channel_hash", hash},
                    {"vessels", vessels},
                    {"rate_floors", record.rate_floors},
                    {"schemes", schemes}};
        return obj.dump();
    }

    void write_snapshots_jsonl(std::ostream &out, std::span<const SnapshotRecord> records)
    {
        for (const SnapshotRecord &r : records)
            out << snapshot_json(r) << '\n';
    }

    namespace
    {
        std::ofstream open_output(const std::filesystem::path &path)
        {
            std::ofstream out(path, std::ios::binary | std::ios::trunc);
            if (!out)
                throw std::runtime_error("cannot write '" + path.string() + "'");
            return out;
        }
    } // namespace

    std::vector<std::filesystem::path> write_sweep_outputs(const std::filesystem::path &dir, const SweepResult &result,
                                                           const SimConfig &cfg)
    {
        std::filesystem::create_directories(dir);
        std::vector<std::filesystem::path> written;

        {
            const auto path = dir / "esr_vs_power.csv";
            auto out = open_output(path);
            write_esr_csv(out, result.metrics, cfg.bandwidth);
            written.push_back(path);
        }

        std::set<double> powers;
        for (const SchemeMetrics &m : result.metrics)
            powers.insert(m.power_dbm);
        for (double p : powers)
        {
            const auto path = dir / cdf_file_name(p);
            auto out = open_output(path);
            write_cdf_csv(out, result.metrics, p);
            written.push_back(path);
        }

        {
            const auto path = dir / "snapshots.jsonl";
            auto out = open_output(path);
            write_snapshots_jsonl(out, result.records);
            written.push_back(path);
        }
        return written;
    }

} // namespace offshore
