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

#include "offshore/schemes.hpp"

#include <cmath>
#include <stdexcept>

namespace offshore
{
    std::string_view scheme_name(SchemeId id)
    {
        switch (id)
        {
        case SchemeId::RraRisAl1:
            return "rra_ris_al1";
        case SchemeId::FdaaOnlyOptimal:
            return "fdaa_only";
        case SchemeId::FdaaRisAl1:
            return "fdaa_ris_al1";
        case SchemeId::RraOnlyOptimal:
            return "rra_only";
        case SchemeId::FdaaRisSdr:
            return "fdaa_ris_sdr";
        }
        return "unknown";
    }

    std::optional<SchemeId> parse_scheme(std::string_view name)
    {
        for (SchemeId id : {SchemeId::RraRisAl1, SchemeId::FdaaOnlyOptimal, SchemeId::FdaaRisAl1,
                            SchemeId::RraOnlyOptimal, SchemeId::FdaaRisSdr})
            if (scheme_name(id) == name)
                return id;
        return std::nullopt;
    }

    bool scheme_supported(SchemeId id)
    {
        return id != SchemeId::FdaaRisSdr;
    }

    ArrayMode scheme_mode(SchemeId id)
    {
        return (id == SchemeId::RraRisAl1 || id == SchemeId::RraOnlyOptimal) ? ArrayMode::Rra : ArrayMode::Fdaa;
    }

    cvec fdaa_only_optimal(const cvec &h)
    {
        return matched_filter_b(h);
    }

    cvec rra_only_optimal(const cvec &h, const cvec &transfer)
    {
        return optimal_b(effective_direct(h, transfer));
    }

    cvec fdaa_transfer_vector(std::size_t n)
    {
        return cvec(n, arma::fill::value(cplx(1.0 / std::sqrt(double(n)), 0.0)));
    }

    AscentResult fdaa_ris_al1(const cmat &bs_to_ris, const cvec &ris_to_vessel, const cvec &direct, SolverConfig cfg)
    {
        cfg.mode = ArrayMode::Fdaa;
        const cvec r = fdaa_transfer_vector(direct.n_elem);
        return alternating_ascent(coupling_matrix(bs_to_ris, ris_to_vessel, r), effective_direct(direct, r), cfg);
    }

    SchemeBeams design_beams(SchemeId id, const ChannelSet &channels, const SolverConfig &cfg)
    {
        if (!scheme_supported(id))
            throw std::invalid_argument("Unsupported scheme: " + std::string(scheme_name(id)));

        const std::size_t n_vessels = channels.num_vessels();
        const std::size_t m = channels.num_ris_elements();
        const cvec fdaa_r = fdaa_transfer_vector(channels.num_bs_elements());

        SchemeBeams out;
        out.id = id;
        out.ris_phases.reserve(n_vessels);
        out.array_weights.reserve(n_vessels);
        out.combined.reserve(n_vessels);
        out.outer_iterations.assign(n_vessels, 0);
        out.converged.assign(n_vessels, true);

        SolverConfig solver = cfg;
        solver.mode = scheme_mode(id);

        for (std::size_t k = 0; k < n_vessels; ++k)
        {
            const cvec &h = channels.direct[k];
            switch (id)
            {
            case SchemeId::RraRisAl1:
            {
                const cmat &a = channels.coupling[k];
                const cvec &c = channels.direct_effective[k];
                AscentResult res = alternating_ascent(a, c, solver);
                cvec w = a * res.mu + c;
                out.array_weights.push_back(optimal_b(w));
                out.combined.push_back(std::move(w));
                out.ris_phases.push_back(std::move(res.mu));
                out.outer_iterations[k] = res.outer_iterations;
                out.converged[k] = res.converged;
                break;
            }
            case SchemeId::FdaaRisAl1:
            {
                const cmat a = coupling_matrix(channels.bs_to_ris, channels.ris_to_vessel[k], fdaa_r);
                const cvec c = effective_direct(h, fdaa_r);
                AscentResult res = alternating_ascent(a, c, solver);
                cvec w = a * res.mu + c;
                out.array_weights.push_back(matched_filter_b(w));
                out.combined.push_back(std::move(w));
                out.ris_phases.push_back(std::move(res.mu));
                out.outer_iterations[k] = res.outer_iterations;
                out.converged[k] = res.converged;
                break;
            }
            case SchemeId::FdaaOnlyOptimal:
                out.ris_phases.emplace_back(m, arma::fill::zeros);
                out.array_weights.push_back(fdaa_only_optimal(h));
                out.combined.push_back(effective_direct(h, fdaa_r));
                break;
            case SchemeId::RraOnlyOptimal:
                out.ris_phases.emplace_back(m, arma::fill::zeros);
                out.array_weights.push_back(rra_only_optimal(h, channels.transfer));
                out.combined.push_back(channels.direct_effective[k]);
                break;
            case SchemeId::FdaaRisSdr:
                break;
            }
        }
        return out;
    }

    BeamSolution evaluate_beams(const SchemeBeams &beams, double snr_scale, std::span<const double> floors)
    {
        const std::size_t n = beams.combined.size();
        if (floors.size() != n)
            throw std::invalid_argument("evaluate_beams: one rate floor per vessel required.");
        if (!(snr_scale > 0.0))
            throw std::invalid_argument("evaluate_beams: SNR scale must be positive.");

        BeamSolution sol;
        sol.rates.resize(n);
        for (std::size_t k = 0; k < n; ++k)
            sol.rates[k] = rate(beams.combined[k], beams.array_weights[k], snr_scale);
        sol.ris_phases = beams.ris_phases;
        sol.array_weights = beams.array_weights;
        sol.outer_iterations = beams.outer_iterations;
        sol.converged = beams.converged;
        allocate_service_time(sol, floors);
        return sol;
    }

    SchemeOutcome run_scheme(SchemeId id, const ChannelSet &channels, double snr_scale,
                             std::span<const double> floors, const SolverConfig &cfg)
    {
        SchemeOutcome out;
        out.id = id;
        if (!scheme_supported(id))
        {
            out.supported = false;
            out.error = "unsupported scheme: " + std::string(scheme_name(id));
            return out;
        }
        try
        {
            out.solution = evaluate_beams(design_beams(id, channels, cfg), snr_scale, floors);
        }
        catch (const std::exception &e)
        {
            out.error = e.what();
        }
        return out;
    }

} // namespace offshore
