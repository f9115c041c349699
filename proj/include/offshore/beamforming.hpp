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

#ifndef OFFSHORE_BEAMFORMING_HPP
#define OFFSHORE_BEAMFORMING_HPP

#include "offshore/types.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace offshore
{
    // RRA: unit-modulus array weights. FDAA: ||b||_2^2 <= N.
    enum class ArrayMode
    {
        Rra,
        Fdaa
    };

    struct SolverConfig
    {
        double outer_tolerance = 1e-6; // Relative change of the outer objective
        double inner_tolerance = 1e-6; // ||mu_new - mu_old||_2^2
        int max_outer = 100;
        int max_inner = 100;
        ArrayMode mode = ArrayMode::Rra;

        void validate() const;
    };

    // Effective per-vessel coefficients of the joint problem
    struct ProblemData
    {
        std::vector<cmat> coupling;         // A_k, N x M
        std::vector<cvec> direct_effective; // c_k, length N
        double snr_scale = 1.0;             // rho / sigma^2
        std::vector<double> rate_floors;    // beta_k

        std::size_t num_vessels() const { return coupling.size(); }
        void validate() const;
    };

    // Joint beamformer and service-time solution for all vessels
    struct BeamSolution
    {
        std::vector<cvec> ris_phases;   // mu_k
        std::vector<cvec> array_weights; // b_k
        std::vector<double> time_share; // t_k, empty when infeasible
        std::vector<double> rates;      // R_k in bits/s/Hz
        double esr = 0.0;
        bool feasible = false;
        std::vector<int> outer_iterations;
        std::vector<bool> converged;
    };

    // log2(1 + snr_scale * |w^H b|^2)
    double rate(const cvec &w, const cvec &b, double snr_scale);

    // Phase-matched weights e^{j arg(w)}; attains |w^H b| = ||w||_1
    cvec optimal_b(const cvec &w);

    // sqrt(N) w / ||w||_2; the zero vector maps to zero weights
    cvec matched_filter_b(const cvec &w);

    // Best array weights for a fixed combined channel w, per mode
    cvec array_update(const cvec &w, ArrayMode mode);

    // Gain |w^H b| achieved by array_update(w, mode)
    double array_gain(const cvec &w, ArrayMode mode);

    // mu^H a a^H mu + 2 Re(c^H mu) + c^H c
    double quadratic_objective(const cvec &a_bar, const cvec &c_bar, const cvec &mu);

    struct FixedPointResult
    {
        cvec mu;
        int iterations = 0;
        bool converged = false;
    };

    // Iterates mu <- e^{j arg(a a^H mu + c)} until ||mu_new - mu_old||^2 < tolerance or max_iter steps.
    // If trace is given, the quadratic objective is appended once for the start point and once per step.
    FixedPointResult fixed_point_iterate(const cvec &a_bar, const cvec &c_bar, const cvec &mu0,
                                         double tolerance, int max_iter,
                                         std::vector<double> *trace = nullptr);

    struct AscentTrace
    {
        std::vector<double> outer;              // |(A mu + c)^H b|^2 after init and after each outer step
        std::vector<std::vector<double>> inner; // quadratic objective per inner run
    };

    struct AscentResult
    {
        cvec mu;
        cvec b;
        double objective = 0.0; // |(A mu + c)^H b|^2
        int outer_iterations = 0;
        int inner_iterations = 0; // summed over outer steps
        bool converged = false;
    };

    // Fixed-point alternating ascent on (mu, b) for max |(A mu + c)^H b|.
    // A is N x M (M may be 0), c has length N.
    AscentResult alternating_ascent(const cmat &coupling, const cvec &direct, const SolverConfig &cfg,
                                    AscentTrace *trace = nullptr);

    // Sum_k beta_k / R_k <= 1. A zero rate with a positive floor is infeasible.
    bool feasibility_check(std::span<const double> rates, std::span<const double> floors);

    // Index of the largest rate, lowest index on ties
    std::size_t best_vessel(std::span<const double> rates);

    // Floors met with equality for every vessel except the best one, which takes the rest.
    // Returns nullopt when the floors cannot be met.
    std::optional<std::vector<double>> optimal_time_allocation(std::span<const double> rates,
                                                               std::span<const double> floors);

    double esr(std::span<const double> rates, std::span<const double> time_share);

    // Maximum ESR for fixed beams, evaluated without materializing t
    double esr_closed_form(std::span<const double> rates, std::span<const double> floors);

    // Feasibility, time allocation and ESR from sol.rates; clears time_share when infeasible
    void allocate_service_time(BeamSolution &sol, std::span<const double> floors);

    // Rates from beams, then feasibility, allocation and ESR
    BeamSolution finalize_solution(std::vector<cvec> ris_phases, std::vector<cvec> array_weights,
                                   std::span<const cmat> coupling, std::span<const cvec> direct,
                                   double snr_scale, std::span<const double> floors);

    BeamSolution solve_p2(const ProblemData &data, const SolverConfig &cfg);

} // namespace offshore

#endif
