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

#ifndef OFFSHORE_HARNESS_HPP
#define OFFSHORE_HARNESS_HPP

#include "offshore/sim_config.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace offshore
{
    // Seed of snapshot `index`, independent of the power point
    std::uint64_t snapshot_seed(std::uint64_t master_seed, std::uint64_t index);

    // K points, area-uniform over {x^2 + y^2 <= l_max^2, x >= 0}
    std::vector<Point2> sample_vessels(Rng &rng, double l_max, std::size_t count);

    // Upper end of the rate-floor distribution: log2(1 + rho_max * N * L(l_max) / sigma^2)
    double rate_floor_cap(double rho_max_w, std::size_t n_elements, double path_loss_at_l_max, double noise_power);
    double rate_floor_cap(const SimConfig &cfg);

    // i.i.d. U(0, cap)
    std::vector<double> sample_rate_floors(Rng &rng, double cap, std::size_t count);

    // 64-bit FNV-1a over every channel coefficient
    std::uint64_t channel_hash(const ChannelSet &channels);

    // Random inputs of one snapshot, shared by every scheme and every power point
    struct SnapshotDraw
    {
        std::size_t index = 0;
        std::uint64_t seed = 0;
        std::vector<Point2> vessels;
        std::vector<double> rate_floors;
        ChannelSet channels;
    };

    // Draw order: vessel positions, rate floors, channels
    SnapshotDraw draw_snapshot(const SimConfig &cfg, std::size_t index);

    struct SchemeRecord
    {
        SchemeId scheme = SchemeId::RraRisAl1;
        bool supported = true;
        std::string error; // Empty on success
        bool feasible = false;
        double esr = 0.0;
        std::vector<double> rates;
        std::vector<double> time_share;
        std::vector<int> outer_iterations;
    };

    struct SnapshotRecord
    {
        std::size_t index = 0;
        std::uint64_t seed = 0;
        double power_dbm = 0.0;
        std::uint64_t channel_hash = 0;
        std::vector<Point2> vessels;
        std::vector<double> rate_floors;
        std::vector<SchemeRecord> schemes; // One per configured scheme, in config order
    };

    SnapshotRecord run_snapshot(const SimConfig &cfg, double power_dbm, std::size_t index);

    struct SchemeMetrics
    {
        SchemeId scheme = SchemeId::RraRisAl1;
        double power_dbm = 0.0;
        std::size_t n_total = 0;
        std::size_t n_feasible = 0;
        double sr = 0.0;
        std::optional<double> mean_esr;  // Over feasible snapshots only
        std::vector<double> esr_samples; // Feasible ESRs, ascending

        // Empirical CDF F(x) = #{samples <= x} / n
        double cdf(double x) const;
    };

    // Groups by (power, scheme); powers ascending, schemes in first-seen order
    std::vector<SchemeMetrics> aggregate(std::span<const SnapshotRecord> records);

    struct SweepResult
    {
        std::vector<SnapshotRecord> records; // Power-major, then snapshot index
        std::vector<SchemeMetrics> metrics;
        std::vector<std::string> diagnostics; // Paired-seed trend violations
    };

    using ProgressCallback = std::function<void(std::size_t done, std::size_t total)>;

    // n_snapshots per power point with the same snapshot seeds at every power
    SweepResult power_sweep(const SimConfig &cfg, const ProgressCallback &progress = {});

    // SR and mean ESR should not drop as power grows; reports every violation
    std::vector<std::string> trend_diagnostics(std::span<const SchemeMetrics> metrics);

} // namespace offshore

#endif
