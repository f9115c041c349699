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

#ifndef OFFSHORE_RECORDS_IO_HPP
#define OFFSHORE_RECORDS_IO_HPP

#include "offshore/harness.hpp"

#include <filesystem>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace offshore
{
    // Column order of esr_vs_power.csv
    inline constexpr const char *esr_csv_header = "scheme,power_dbm,sr,mean_esr,n_feasible,n_total,mean_esr_bps";
    inline constexpr const char *cdf_csv_header = "scheme,esr_sample";

    // Shortest decimal form that round-trips to the same double
    std::string format_number(double value);

    // "cdf_45dbm.csv"; non-integer powers keep their decimals ("cdf_42.5dbm.csv")
    std::string cdf_file_name(double power_dbm);

    // mean_esr and mean_esr_bps are empty when no snapshot was feasible
    void write_esr_csv(std::ostream &out, std::span<const SchemeMetrics> metrics, double bandwidth_hz);

    // Feasible ESR samples of every scheme at one power point
    void write_cdf_csv(std::ostream &out, std::span<const SchemeMetrics> metrics, double power_dbm);

    // One JSON object per line
    std::string snapshot_json(const SnapshotRecord &record);
    void write_snapshots_jsonl(std::ostream &out, std::span<const SnapshotRecord> records);

    // Writes esr_vs_power.csv, one cdf_<power>.csv per power point and snapshots.jsonl.
    // Returns the written paths.
    std::vector<std::filesystem::path> write_sweep_outputs(const std::filesystem::path &dir, const SweepResult &result,
                                                           const SimConfig &cfg);

} // namespace offshore

#endif
