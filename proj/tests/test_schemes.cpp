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


#include "offshore/harness.hpp"
#include "offshore/schemes.hpp"

#include "catch_amalgamated.hpp"

#include <cmath>

using namespace offshore;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace
{
    // 1 W over the default noise floor
    double unit_snr(const SimConfig &cfg) { return 1.0 / cfg.noise_power(); }

    std::vector<double> no_floors(const ChannelSet &ch) { return std::vector<double>(ch.num_vessels(), 0.0); }
} // namespace

TEST_CASE("scheme names round-trip", "[schemes]")
{
    for (SchemeId id : {SchemeId::RraRisAl1, SchemeId::FdaaOnlyOptimal, SchemeId::FdaaRisAl1, SchemeId::RraOnlyOptimal,
                        SchemeId::FdaaRisSdr})
    {
        const auto parsed = parse_scheme(scheme_name(id));
        REQUIRE(parsed);
        CHECK(*parsed == id);
    }
    CHECK(scheme_name(SchemeId::RraRisAl1) == "rra_ris_al1");
    CHECK(scheme_name(SchemeId::FdaaOnlyOptimal) == "fdaa_only");
    CHECK(scheme_name(SchemeId::FdaaRisAl1) == "fdaa_ris_al1");
    CHECK(scheme_name(SchemeId::RraOnlyOptimal) == "rra_only");
    CHECK_FALSE(parse_scheme("RRA_RIS_AL1"));
    CHECK_FALSE(parse_scheme(""));
}

TEST_CASE("scheme array modes", "[schemes]")
{
    CHECK(scheme_mode(SchemeId::RraRisAl1) == ArrayMode::Rra);
    CHECK(scheme_mode(SchemeId::RraOnlyOptimal) == ArrayMode::Rra);
    CHECK(scheme_mode(SchemeId::FdaaRisAl1) == ArrayMode::Fdaa);
    CHECK(scheme_mode(SchemeId::FdaaOnlyOptimal) == ArrayMode::Fdaa);
    for (SchemeId id : implemented_schemes)
        CHECK(scheme_supported(id));
}

TEST_CASE("SDR benchmark is reported as unsupported", "[schemes]")
{
    const SnapshotDraw draw = draw_snapshot(SimConfig{}, 0);
    CHECK_FALSE(scheme_supported(SchemeId::FdaaRisSdr));
    CHECK_THROWS_AS(design_beams(SchemeId::FdaaRisSdr, draw.channels, SolverConfig{}), std::invalid_argument);
    const SchemeOutcome out = run_scheme(SchemeId::FdaaRisSdr, draw.channels, 1.0, draw.rate_floors, SolverConfig{});
    CHECK_FALSE(out.supported);
    CHECK_FALSE(out.error.empty());
}

TEST_CASE("FDAA transfer vector", "[schemes]")
{
    const cvec r = fdaa_transfer_vector(16);
    CHECK_THAT(arma::norm(r, 2), WithinAbs(1.0, 1e-15));
    CHECK_THAT(std::abs(r[7] - cplx(0.25, 0.0)), WithinAbs(0.0, 1e-15));
}

TEST_CASE("no-RIS benchmarks have closed-form rates", "[schemes]")
{
    const SimConfig cfg;
    const double snr = unit_snr(cfg);
    for (std::size_t index = 0; index < 5; ++index)
    {
        const SnapshotDraw draw = draw_snapshot(cfg, index);
        const ChannelSet &ch = draw.channels;
        const BeamSolution fdaa =
            evaluate_beams(design_beams(SchemeId::FdaaOnlyOptimal, ch, cfg.solver), snr, no_floors(ch));
        const BeamSolution rra =
            evaluate_beams(design_beams(SchemeId::RraOnlyOptimal, ch, cfg.solver), snr, no_floors(ch));
        for (std::size_t k = 0; k < ch.num_vessels(); ++k)
        {
            const double h2 = std::pow(arma::norm(ch.direct[k], 2), 2);
            const double rh1 = std::pow(arma::norm(ch.direct_effective[k], 1), 2);
            CHECK_THAT(fdaa.rates[k], WithinRel(std::log2(1.0 + snr * h2), 1e-12));
            CHECK_THAT(rra.rates[k], WithinRel(std::log2(1.0 + snr * rh1), 1e-12));
            // ||conj(r) . h||_1 <= ||r||_2 ||h||_2 with ||r||_2 = 1
            CHECK(rra.rates[k] <= fdaa.rates[k] * (1.0 + 1e-12));
            CHECK(arma::norm(fdaa.ris_phases[k], 2) == 0.0);
            CHECK(rra.ris_phases[k].n_elem == ch.num_ris_elements());
        }
    }
}

TEST_CASE("benchmark beams satisfy their array constraints", "[schemes]")
{
    const SimConfig cfg;
    const SnapshotDraw draw = draw_snapshot(cfg, 3);
    const double n = double(draw.channels.num_bs_elements());
    for (SchemeId id : implemented_schemes)
    {
        const SchemeBeams beams = design_beams(id, draw.channels, cfg.solver);
        REQUIRE(beams.array_weights.size() == cfg.num_vessels);
        for (const cvec &b : beams.array_weights)
        {
            if (scheme_mode(id) == ArrayMode::Rra)
                CHECK_THAT(arma::max(arma::abs(arma::abs(b) - 1.0)), WithinAbs(0.0, 1e-12));
            else
                CHECK(std::pow(arma::norm(b, 2), 2) <= n * (1.0 + 1e-12));
        }
        if (id == SchemeId::RraRisAl1 || id == SchemeId::FdaaRisAl1)
            for (const cvec &mu : beams.ris_phases)
                CHECK_THAT(arma::max(arma::abs(arma::abs(mu) - 1.0)), WithinAbs(0.0, 1e-12));
    }
}

TEST_CASE("proposed scheme matches the joint solver", "[schemes]")
{
    const SimConfig cfg;
    const SnapshotDraw draw = draw_snapshot(cfg, 1);
    ProblemData data;
    data.coupling = draw.channels.coupling;
    data.direct_effective = draw.channels.direct_effective;
    data.snr_scale = dbm_to_watt(45.0) / cfg.noise_power();
    data.rate_floors = draw.rate_floors;

    const BeamSolution direct = solve_p2(data, cfg.solver);
    const SchemeOutcome scheme =
        run_scheme(SchemeId::RraRisAl1, draw.channels, data.snr_scale, draw.rate_floors, cfg.solver);
    REQUIRE(scheme.error.empty());
    CHECK(scheme.solution.rates == direct.rates);
    CHECK(scheme.solution.feasible == direct.feasible);
    CHECK(scheme.solution.esr == direct.esr);
    CHECK(scheme.solution.time_share == direct.time_share);
}

TEST_CASE("FDAA with RIS reduces to the ascent on the scaled problem", "[schemes]")
{
    const SimConfig cfg;
    const SnapshotDraw draw = draw_snapshot(cfg, 2);
    const ChannelSet &ch = draw.channels;
    const SchemeBeams beams = design_beams(SchemeId::FdaaRisAl1, ch, cfg.solver);
    for (std::size_t k = 0; k < ch.num_vessels(); ++k)
    {
        const AscentResult res = fdaa_ris_al1(ch.bs_to_ris, ch.ris_to_vessel[k], ch.direct[k], cfg.solver);
        CHECK(arma::approx_equal(res.mu, beams.ris_phases[k], "absdiff", 0.0));
        // Physical channel F^H G mu + h carries sqrt(N) times the combined gain
        const cvec phys = ch.bs_to_ris.t() * (ch.ris_to_vessel[k] % res.mu) + ch.direct[k];
        CHECK_THAT(std::abs(arma::cdot(beams.combined[k], beams.array_weights[k])),
                   WithinRel(arma::norm(phys, 2), 1e-10));
    }
}

TEST_CASE("RIS schemes dominate their no-RIS counterparts on most links", "[schemes]")
{
    const SimConfig cfg;
    const double snr = unit_snr(cfg);
    int links = 0, fdaa_wins = 0, rra_wins = 0;
    for (std::size_t index = 0; index < 20; ++index)
    {
        const SnapshotDraw draw = draw_snapshot(cfg, index);
        const auto floors = no_floors(draw.channels);
        const auto rate_of = [&](SchemeId id) {
            return evaluate_beams(design_beams(id, draw.channels, cfg.solver), snr, floors).rates;
        };
        const auto fr = rate_of(SchemeId::FdaaRisAl1), fo = rate_of(SchemeId::FdaaOnlyOptimal);
        const auto rr = rate_of(SchemeId::RraRisAl1), ro = rate_of(SchemeId::RraOnlyOptimal);
        for (std::size_t k = 0; k < fr.size(); ++k)
        {
            ++links;
            fdaa_wins += fr[k] >= fo[k];
            rra_wins += rr[k] >= ro[k];
        }
    }
    CHECK(fdaa_wins >= 0.95 * links);
    CHECK(rra_wins >= 0.95 * links);
}

TEST_CASE("scheme evaluation input checks", "[schemes]")
{
    const SnapshotDraw draw = draw_snapshot(SimConfig{}, 0);
    const SchemeBeams beams = design_beams(SchemeId::RraOnlyOptimal, draw.channels, SolverConfig{});
    CHECK_THROWS_AS(evaluate_beams(beams, 1.0, std::vector<double>{1.0}), std::invalid_argument);
    CHECK_THROWS_AS(evaluate_beams(beams, 0.0, draw.rate_floors), std::invalid_argument);
}
