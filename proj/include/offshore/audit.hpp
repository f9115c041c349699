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

#ifndef OFFSHORE_AUDIT_HPP
#define OFFSHORE_AUDIT_HPP

#include "offshore/beamforming.hpp"
#include "offshore/oracle.hpp"

#include <cstdint>
#include <ostream>
#include <vector>

namespace offshore
{
    // Random (A, c) with i.i.d. CN(0,1) entries; A is N x M
    struct RandomInstance
    {
        cmat coupling;
        cvec direct;
    };

    RandomInstance random_instance(Rng &rng, arma::uword n, arma::uword m);

    struct AuditRow
    {
        std::uint64_t seed = 0;
        double ascent_objective = 0.0; // ||A mu + c||_1 from alternating ascent
        double grid_objective = 0.0;   // Phase-grid optimum
        double ratio = 0.0;
    };

    struct AuditSummary
    {
        std::vector<AuditRow> rows;
        double min_ratio = 0.0;
        double median_ratio = 0.0;
        double fraction_at_least = 0.0; // Share of rows with ratio >= threshold
        double threshold = 0.9;
    };

    // Seeds run base_seed, base_seed + 1, ...
    AuditSummary audit_ascent_against_grid(std::size_t n_instances, arma::uword n, arma::uword m,
                                           const oracle::GridSpec &grid, const SolverConfig &solver,
                                           std::uint64_t base_seed, double threshold = 0.9);

    // seed,ascent_objective,grid_objective,ratio
    void write_audit_csv(std::ostream &out, const AuditSummary &summary);

} // namespace offshore

#endif
