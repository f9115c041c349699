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

#ifndef OFFSHORE_SIM_CONFIG_HPP
#define OFFSHORE_SIM_CONFIG_HPP

#include "offshore/beamforming.hpp"
#include "offshore/channel_model.hpp"
#include "offshore/schemes.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace offshore
{
    // Raised for malformed or inconsistent configuration files
    class ConfigError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    // Monte Carlo experiment description. Defaults reproduce the reference offshore scenario:
    // 8x8 RRA at (0,0), 8x8 RIS at (10 km, 0), K = 4 vessels within 30 km, 5.8 GHz / 20 MHz.
    struct SimConfig
    {
        // Scenario
        Point2 bs_position{0.0, 0.0};
        Point2 ris_position{10000.0, 0.0};
        double h_bs = 50.0;
        double h_ris = 15.0;
        double h_vessel = 10.0;
        double carrier_freq = 5.8e9;
        double bandwidth = 20.0e6;
        double noise_psd_dbm_hz = -170.0;
        std::size_t num_vessels = 4;
        double l_max = 30000.0;

        // Arrays
        unsigned bs_n_h = 8, bs_n_v = 8;
        unsigned ris_n_h = 8, ris_n_v = 8;
        double spacing_wavelengths = 0.5;
        double feed_pattern_exponent = 6.5;
        std::optional<double> feed_height; // default sqrt(N) * d

        double rician_factor_db = 10.0;

        SolverConfig solver;

        // Experiment
        std::vector<double> power_dbm{35.0, 40.0, 45.0, 50.0, 55.0};
        double rate_floor_power_dbm = 55.0; // rho_max in the rate-floor distribution
        std::size_t n_snapshots = 500;
        std::uint64_t master_seed = 1;
        std::vector<SchemeId> schemes{implemented_schemes.begin(), implemented_schemes.end()};
        unsigned threads = 1;

        std::string output_dir = "results";

        double wavelength() const { return speed_of_light / carrier_freq; }
        double element_spacing() const { return spacing_wavelengths * wavelength(); }
        UpaGeometry bs_array() const { return {bs_n_h, bs_n_v, element_spacing()}; }
        UpaGeometry ris_array() const { return {ris_n_h, ris_n_v, element_spacing()}; }
        RraFeedModel feed() const;
        RicianConfig rician() const { return RicianConfig::from_db(rician_factor_db); }
        double noise_power() const; // W
        ScenarioGeometry geometry(std::vector<Point2> vessels) const;

        // Throws ConfigError
        void validate() const;
    };

    // Parses a JSON config. Missing keys keep their defaults; unknown keys are rejected.
    SimConfig parse_config(const std::string &json_text);
    SimConfig load_config(const std::string &path);

    // Full config as JSON, with every field present
    std::string dump_config(const SimConfig &cfg);

} // namespace offshore

#endif
