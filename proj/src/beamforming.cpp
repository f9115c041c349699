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

#include "offshore/beamforming.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace offshore
{
    void SolverConfig::validate() const
    {
        if (!(outer_tolerance > 0.0) || !(inner_tolerance > 0.0))
            throw std::invalid_argument("Solver tolerances must be positive.");
        if (max_outer < 1 || max_inner < 1)
            throw std::invalid_argument("Solver iteration limits must be at least 1.");
    }

    void ProblemData::validate() const
    {
        const std::size_t k = coupling.size();
        if (k == 0)
            throw std::invalid_argument("Problem needs at least one vessel.");
        if (direct_effective.size() != k || rate_floors.size() != k)
            throw std::invalid_argument("Per-vessel inputs have inconsistent lengths.");
        if (!(snr_scale > 0.0) || !std::isfinite(snr_scale))
            throw std::invalid_argument("SNR scale must be positive and finite.");
        for (std::size_t i = 0; i < k; ++i)
        {
            if (coupling[i].n_rows != direct_effective[i].n_elem)
                throw std::invalid_argument("A_k rows must match the length of c_k (vessel " + std::to_string(i) + ").");
            if (!(rate_floors[i] >= 0.0))
                throw std::invalid_argument("Rate floors must be non-negative.");
        }
    }

    double rate(const cvec &w, const cvec &b, double snr_scale)
    {
        if (w.n_elem != b.n_elem)
            throw std::invalid_argument("rate: dimension mismatch.");
        const double gain = std::abs(arma::cdot(w, b));
        return std::log2(1.0 + snr_scale * gain * gain);
    }

    cvec optimal_b(const cvec &w)
    {
        return unit_phase(w);
    }

    cvec matched_filter_b(const cvec &w)
    {
        const double nrm = arma::norm(w, 2);
        if (nrm == 0.0)
            return cvec(w.n_elem, arma::fill::zeros);
        return (std::sqrt(double(w.n_elem)) / nrm) * w;
    }

    cvec array_update(const cvec &w, ArrayMode mode)
    {
        return mode == ArrayMode::Rra ? optimal_b(w) : matched_filter_b(w);
    }

    double array_gain(const cvec &w, ArrayMode mode)
    {
        return mode == ArrayMode::Rra ? arma::norm(w, 1) : std::sqrt(double(w.n_elem)) * arma::norm(w, 2);
    }

    double quadratic_objective(const cvec &a_bar, const cvec &c_bar, const cvec &mu)
    {
        const double proj = std::abs(arma::cdot(a_bar, mu));
        const double lin = std::real(arma::cdot(c_bar, mu));
        const double cc = std::real(arma::cdot(c_bar, c_bar));
        return proj * proj + 2.0 * lin + cc;
    }

    FixedPointResult fixed_point_iterate(const cvec &a_bar, const cvec &c_bar, const cvec &mu0,
                                         double tolerance, int max_iter, std::vector<double> *trace)
    {
        if (a_bar.n_elem != mu0.n_elem || c_bar.n_elem != mu0.n_elem)
            throw std::invalid_argument("fixed_point_iterate: dimension mismatch.");

        FixedPointResult res;
        res.mu = mu0;
        if (trace)
            trace->push_back(quadratic_objective(a_bar, c_bar, res.mu));

        while (res.iterations < max_iter)
        {
            ++res.iterations;
            // Zero entries of the direction map to phase 0
            const cvec direction = a_bar * arma::cdot(a_bar, res.mu) + c_bar;
            const cvec previous = res.mu;
            res.mu = unit_phase(direction);
            if (trace)
                trace->push_back(quadratic_objective(a_bar, c_bar, res.mu));

            const double step = std::pow(arma::norm(previous - res.mu, 2), 2);
            if (step < tolerance)
            {
                res.converged = true;
                break;
            }
        }
        return res;
    }

    namespace
    {
        double combined_objective(const cvec &w, const cvec &b)
        {
            const double g = std::abs(arma::cdot(w, b));
            return g * g;
        }

        double relative_change(double now, double before)
        {
            const double scale = std::max(std::abs(now), std::abs(before));
            if (scale == 0.0)
                return 0.0;
            return std::abs(now - before) / scale;
        }
    } // namespace

    AscentResult alternating_ascent(const cmat &coupling, const cvec &direct, const SolverConfig &cfg,
                                    AscentTrace *trace)
    {
        cfg.validate();
        if (coupling.n_rows != direct.n_elem)
            throw std::invalid_argument("alternating_ascent: A must have as many rows as c has entries.");

        cvec mu(coupling.n_cols, arma::fill::ones);
        cvec w = coupling * mu + direct;
        cvec b = array_update(w, cfg.mode);
        double objective = combined_objective(w, b);
        if (trace)
        {
            trace->outer.assign(1, objective);
            trace->inner.clear();
        }

        AscentResult best{mu, b, objective, 0, 0, false};
        double delta = std::numeric_limits<double>::infinity();
        int outer = 0;
        int inner_total = 0;

        while (delta >= cfg.outer_tolerance && outer < cfg.max_outer)
        {
            ++outer;
            // Objective for fixed b: |a^H mu + s|^2 with a = A^H b, s = b^H c.
            // Its linear term is 2 Re((a s)^H mu), so the fixed-point offset is a * s.
            const cvec a_bar = coupling.t() * b;
            const cplx s = arma::cdot(b, direct);
            const cvec c_bar = a_bar * s;

            std::vector<double> *inner_trace = nullptr;
            if (trace)
                inner_trace = &trace->inner.emplace_back();
            FixedPointResult fp = fixed_point_iterate(a_bar, c_bar, mu, cfg.inner_tolerance, cfg.max_inner, inner_trace);
            inner_total += fp.iterations;
            mu = std::move(fp.mu);

            w = coupling * mu + direct;
            b = array_update(w, cfg.mode);
            const double updated = combined_objective(w, b);
            delta = relative_change(updated, objective);
            objective = updated;
            if (trace)
                trace->outer.push_back(objective);

            if (objective >= best.objective)
            {
                best.mu = mu;
                best.b = b;
                best.objective = objective;
            }
        }

        best.outer_iterations = outer;
        best.inner_iterations = inner_total;
        best.converged = delta < cfg.outer_tolerance;
        return best;
    }

    bool feasibility_check(std::span<const double> rates, std::span<const double> floors)
    {
        if (rates.size() != floors.size())
            throw std::invalid_argument("feasibility_check: rates and floors differ in length.");
        double load = 0.0;
        for (std::size_t k = 0; k < rates.size(); ++k)
        {
            if (floors[k] <= 0.0)
                continue;
            if (!(rates[k] > 0.0))
                return false;
            load += floors[k] / rates[k];
        }
        return load <= 1.0;
    }

    std::size_t best_vessel(std::span<const double> rates)
    {
        if (rates.empty())
            throw std::invalid_argument("best_vessel: empty rate list.");
        std::size_t best = 0;
        for (std::size_t k = 1; k < rates.size(); ++k)
            if (rates[k] > rates[best])
                best = k;
        return best;
    }

    std::optional<std::vector<double>> optimal_time_allocation(std::span<const double> rates,
                                                               std::span<const double> floors)
    {
        if (!feasibility_check(rates, floors))
            return std::nullopt;

        const std::size_t k_star = best_vessel(rates);
        std::vector<double> t(rates.size(), 0.0);
        double assigned = 0.0;
        for (std::size_t k = 0; k < rates.size(); ++k)
        {
            if (k == k_star || floors[k] <= 0.0)
                continue;
            t[k] = floors[k] / rates[k];
            assigned += t[k];
        }
        t[k_star] = 1.0 - assigned;

        // The leftover share must still cover the best vessel's own floor
        const double slack = t[k_star] * rates[k_star] - floors[k_star];
        if (t[k_star] < 0.0 || slack < -1e-9 * std::max(1.0, floors[k_star]))
            throw std::logic_error("optimal_time_allocation: best vessel left below its rate floor.");
        return t;
    }

    double esr(std::span<const double> rates, std::span<const double> time_share)
    {
        if (rates.size() != time_share.size())
            throw std::invalid_argument("esr: rates and time shares differ in length.");
        double sum = 0.0;
        for (std::size_t k = 0; k < rates.size(); ++k)
            sum += time_share[k] * rates[k];
        return sum;
    }

    double esr_closed_form(std::span<const double> rates, std::span<const double> floors)
    {
        const std::size_t k_star = best_vessel(rates);
        double load = 0.0;
        double floor_sum = 0.0;
        for (std::size_t k = 0; k < rates.size(); ++k)
        {
            if (k == k_star || floors[k] <= 0.0)
                continue;
            load += floors[k] / rates[k];
            floor_sum += floors[k];
        }
        return (1.0 - load) * rates[k_star] + floor_sum;
    }

    BeamSolution finalize_solution(std::vector<cvec> ris_phases, std::vector<cvec> array_weights,
                                   std::span<const cmat> coupling, std::span<const cvec> direct,
                                   double snr_scale, std::span<const double> floors)
    {
        const std::size_t n = coupling.size();
        if (ris_phases.size() != n || array_weights.size() != n || direct.size() != n || floors.size() != n)
            throw std::invalid_argument("finalize_solution: per-vessel inputs have inconsistent lengths.");

        BeamSolution sol;
        sol.rates.resize(n);
        for (std::size_t k = 0; k < n; ++k)
        {
            const cvec w = coupling[k] * ris_phases[k] + direct[k];
            sol.rates[k] = rate(w, array_weights[k], snr_scale);
        }
        sol.ris_phases = std::move(ris_phases);
        sol.array_weights = std::move(array_weights);
        allocate_service_time(sol, floors);
        return sol;
    }

    void allocate_service_time(BeamSolution &sol, std::span<const double> floors)
    {
        sol.time_share.clear();
        sol.esr = 0.0;
        sol.feasible = false;
        if (auto t = optimal_time_allocation(sol.rates, floors))
        {
            sol.feasible = true;
            sol.time_share = std::move(*t);
            sol.esr = esr(sol.rates, sol.time_share);
        }
    }

    BeamSolution solve_p2(const ProblemData &data, const SolverConfig &cfg)
    {
        data.validate();
        cfg.validate();

        const std::size_t n = data.num_vessels();
        std::vector<cvec> mu(n), b(n);
        std::vector<int> iterations(n);
        std::vector<bool> converged(n);
        for (std::size_t k = 0; k < n; ++k)
        {
            AscentResult res = alternating_ascent(data.coupling[k], data.direct_effective[k], cfg);
            b[k] = array_update(data.coupling[k] * res.mu + data.direct_effective[k], cfg.mode);
            mu[k] = std::move(res.mu);
            iterations[k] = res.outer_iterations;
            converged[k] = res.converged;
        }

        BeamSolution sol = finalize_solution(std::move(mu), std::move(b), data.coupling, data.direct_effective,
                                             data.snr_scale, data.rate_floors);
        sol.outer_iterations = std::move(iterations);
        sol.converged = std::move(converged);
        return sol;
    }

} // namespace offshore
