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

#ifndef OFFSHORE_SCHEMES_HPP
#define OFFSHORE_SCHEMES_HPP

#include "offshore/beamforming.hpp"
#include "offshore/channel_model.hpp"

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace offshore
{
    // The proposed design and its benchmarks. FdaaRisSdr is recognised but not implemented.
    enum class SchemeId
    {
        RraRisAl1,
        FdaaOnlyOptimal,
        FdaaRisAl1,
        RraOnlyOptimal,
        FdaaRisSdr
    };

    inline constexpr std::array<SchemeId, 4> implemented_schemes = {
        SchemeId::RraRisAl1, SchemeId::FdaaOnlyOptimal, SchemeId::FdaaRisAl1, SchemeId::RraOnlyOptimal};

    // Stable names used in config files and CSV output
    std::string_view scheme_name(SchemeId id);
    std::optional<SchemeId> parse_scheme(std::string_view name);
    bool scheme_supported(SchemeId id);
    ArrayMode scheme_mode(SchemeId id);

    // Full-power digital beam towards h alone: sqrt(N) h / ||h||_2
    cvec fdaa_only_optimal(const cvec &h);

    // Phase-only beam for the RRA without RIS: e^{j arg(R^H h)}
    cvec rra_only_optimal(const cvec &h, const cvec &transfer);

    // Transfer vector I/sqrt(N) that turns the RRA model into the FDAA model
    cvec fdaa_transfer_vector(std::size_t n);

    // RIS phases from alternating ascent with the matched-filter array update, on A = F^H G / sqrt(N), c = h / sqrt(N)
    AscentResult fdaa_ris_al1(const cmat &bs_to_ris, const cvec &ris_to_vessel, const cvec &direct, SolverConfig cfg);

    // Power-independent part of a scheme: beams and the combined channels they act on
    struct SchemeBeams
    {
        SchemeId id = SchemeId::RraRisAl1;
        std::vector<cvec> ris_phases;    // mu_k (zero vector when the RIS is unused)
        std::vector<cvec> array_weights; // b_k
        std::vector<cvec> combined;      // w_k = A_k mu_k + c_k in the scheme's array model
        std::vector<int> outer_iterations;
        std::vector<bool> converged;
    };

    struct SchemeOutcome
    {
        SchemeId id = SchemeId::RraRisAl1;
        bool supported = true;
        std::string error;
        BeamSolution solution;
    };

    // Throws std::invalid_argument for unsupported schemes
    SchemeBeams design_beams(SchemeId id, const ChannelSet &channels, const SolverConfig &cfg);

    // Rates at the given SNR scale, then feasibility and service-time allocation
    BeamSolution evaluate_beams(const SchemeBeams &beams, double snr_scale, std::span<const double> floors);

    // design_beams + evaluate_beams; unsupported schemes and solver errors come back as outcome errors
    SchemeOutcome run_scheme(SchemeId id, const ChannelSet &channels, double snr_scale,
                             std::span<const double> floors, const SolverConfig &cfg);

} // namespace offshore

#endif
