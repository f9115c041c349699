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

#ifndef OFFSHORE_ORACLE_HPP
#define OFFSHORE_ORACLE_HPP

#include "offshore/types.hpp"

#include <cstdint>
#include <span>
#include <vector>

// Exhaustive references for tiny instances. These do not call into the optimizer.
namespace offshore::oracle
{
    struct GridSpec
    {
        unsigned phase_levels = 16;   // L, phases 2 pi l / L
        unsigned max_enum_bits = 24;  // Refuse when M * log2(L) exceeds this
        double simplex_step = 0.01;
    };

    struct PhaseGridResult
    {
        cvec mu;
        double objective = 0.0; // max ||A mu + c||_1 over the grid
        std::uint64_t evaluated = 0;
    };

    // Enumerates all L^M grid phase vectors. Throws std::invalid_argument when the enumeration cap is exceeded.
    PhaseGridResult brute_force_mu(const cmat &coupling, const cvec &direct, const GridSpec &grid);

    // ||A mu + c||_1 for one candidate
    double phase_objective(const cmat &coupling, const cvec &direct, const cvec &mu);

    struct SimplexGridResult
    {
        std::vector<double> time_share;
        double esr = 0.0;
        bool found = false;
        double step_used = 0.0;
    };

    // Best floor-feasible point on the simplex grid {t : t_k = n_k * step, sum n_k = 1/step}.
    // If no grid point meets the floors, the step is halved once before giving up.
    SimplexGridResult brute_force_allocation(std::span<const double> rates, std::span<const double> floors,
                                             double step);

} // namespace offshore::oracle

#endif
