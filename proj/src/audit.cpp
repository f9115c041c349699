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

#include "offshore/audit.hpp"

#include "offshore/channel_model.hpp"
#include "offshore/records_io.hpp"

#include <algorithm>
#include <stdexcept>

namespace offshore
{
    RandomInstance random_instance(Rng &rng, arma::uword n, arma::uword m)
    {
        RandomInstance inst;
        inst.coupling = complex_gaussian(n, m, rng);
        inst.direct = complex_gaussian(n, 1, rng).col(0);
        return inst;
    }

    AuditSummary audit_ascent_against_grid(std::size_t n_instances, arma::uword n, arma::uword m,
                                           const oracle::GridSpec &grid, const SolverConfig &solver,
                                           std::uint64_t base_seed, double threshold)
    {
        if (n_instances == 0)
            throw std::invalid_argument("audit: need at least one instance.");

        AuditSummary summary;
        summary.threshold = threshold;
        summary.rows.reserve(n_instances);
        std::size_t hits = 0;
        for (std::size_t i = 0; i < n_instances; ++i)
        {
            AuditRow row;
            row.seed = base_seed + i;
            Rng rng(row.seed);
            const RandomInstance inst = random_instance(rng, n, m);

            const AscentResult res = alternating_ascent(inst.coupling, inst.direct, solver);
            row.ascent_objective = arma::norm(inst.coupling * res.mu + inst.direct, 1);
            row.grid_objective = oracle::brute_force_mu(inst.coupling, inst.direct, grid).objective;
            row.ratio = row.ascent_objective / row.grid_objective;
            if (row.ratio >= threshold)
                ++hits;
            summary.rows.push_back(row);
        }

        std::vector<double> ratios;
        for (const AuditRow &r : summary.rows)
            ratios.push_back(r.ratio);
        std::sort(ratios.begin(), ratios.end());
        summary.min_ratio = ratios.front();
        const std::size_t mid = ratios.size() / 2;
        summary.median_ratio = ratios.size() % 2 ? ratios[mid] : 0.5 * (ratios[mid - 1] + ratios[mid]);
        summary.fraction_at_least = double(hits) / double(n_instances);
        return summary;
    }

    void write_audit_csv(std::ostream &out, const AuditSummary &summary)
    {
        out << "seed,ascent_objective,grid_objective,ratio\n";
        for (const AuditRow &r : summary.rows)
            out << r.seed << ',' << format_number(r.ascent_objective) << ',' << format_number(r.grid_objective) << ','
                << format_number(r.ratio) << '\n';
    }

} // namespace offshore
