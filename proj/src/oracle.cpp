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

#include "offshore/oracle.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

namespace offshore::oracle
{
    double phase_objective(const cmat &coupling, const cvec &direct, const cvec &mu)
    {
        // Written out elementwise so the oracle shares no code path with the solver
        double total = 0.0;
        for (arma::uword i = 0; i < coupling.n_rows; ++i)
        {
            cplx acc = direct[i];
            for (arma::uword j = 0; j < coupling.n_cols; ++j)
                acc += coupling(i, j) * mu[j];
            total += std::abs(acc);
        }
        return total;
    }

    PhaseGridResult brute_force_mu(const cmat &coupling, const cvec &direct, const GridSpec &grid)
    {
        if (grid.phase_levels < 2)
            throw std::invalid_argument("Phase grid needs at least two levels.");
        if (coupling.n_rows != direct.n_elem)
            throw std::invalid_argument("brute_force_mu: A and c dimensions differ.");

        const arma::uword m = coupling.n_cols;
        const double bits = double(m) * std::log2(double(grid.phase_levels));
        if (bits > double(grid.max_enum_bits))
            throw std::invalid_argument("brute_force_mu: enumeration of " + std::to_string(grid.phase_levels) + "^" +
                                        std::to_string(m) + " points exceeds the cap.");

        std::vector<cplx> levels(grid.phase_levels);
        for (unsigned l = 0; l < grid.phase_levels; ++l)
            levels[l] = std::polar(1.0, 2.0 * pi * l / grid.phase_levels);

        std::vector<unsigned> digits(m, 0);
        cvec mu(m, arma::fill::ones);

        PhaseGridResult best;
        best.objective = -1.0;
        while (true)
        {
            for (arma::uword j = 0; j < m; ++j)
                mu[j] = levels[digits[j]];
            const double obj = phase_objective(coupling, direct, mu);
            ++best.evaluated;
            if (obj > best.objective)
            {
                best.objective = obj;
                best.mu = mu;
            }

            // Odometer increment
            arma::uword pos = 0;
            while (pos < m && ++digits[pos] == grid.phase_levels)
                digits[pos++] = 0;
            if (pos == m)
                break;
        }
        return best;
    }

    namespace
    {
        SimplexGridResult search(std::span<const double> rates, std::span<const double> floors, long units)
        {
            const std::size_t k = rates.size();
            const double step = 1.0 / double(units);
            SimplexGridResult best;
            best.step_used = step;
            best.esr = -1.0;

            std::vector<long> counts(k, 0);
            std::vector<double> t(k, 0.0);

            // Recursive composition of `units` into k non-negative parts
            std::function<void(std::size_t, long)> visit = [&](std::size_t idx, long remaining) {
                if (idx + 1 == k)
                {
                    counts[idx] = remaining;
                    double value = 0.0;
                    for (std::size_t i = 0; i < k; ++i)
                    {
                        t[i] = double(counts[i]) * step;
                        // Small slack absorbs the rounding of n * step
                        if (t[i] * rates[i] < floors[i] - 1e-12)
                            return;
                        value += t[i] * rates[i];
                    }
                    if (value > best.esr)
                    {
                        best.esr = value;
                        best.time_share = t;
                        best.found = true;
                    }
                    return;
                }
                for (long n = 0; n <= remaining; ++n)
                {
                    counts[idx] = n;
                    visit(idx + 1, remaining - n);
                }
            };
            visit(0, units);
            if (!best.found)
                best.esr = 0.0;
            return best;
        }
    } // namespace

    SimplexGridResult brute_force_allocation(std::span<const double> rates, std::span<const double> floors, double step)
    {
        if (rates.size() != floors.size() || rates.empty())
            throw std::invalid_argument("brute_force_allocation: rates and floors must be non-empty and equal length.");
        if (rates.size() > 4)
            throw std::invalid_argument("brute_force_allocation: at most 4 vessels.");
        if (!(step > 0.0) || step > 1.0)
            throw std::invalid_argument("brute_force_allocation: step must be in (0, 1].");

        const long units = std::lround(1.0 / step);
        if (std::abs(double(units) * step - 1.0) > 1e-9)
            throw std::invalid_argument("brute_force_allocation: step must divide 1.");

        SimplexGridResult res = search(rates, floors, units);
        if (!res.found)
            res = search(rates, floors, 2 * units);
        return res;
    }

} // namespace offshore::oracle
