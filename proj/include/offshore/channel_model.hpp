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

#ifndef OFFSHORE_CHANNEL_MODEL_HPP
#define OFFSHORE_CHANNEL_MODEL_HPP

#include "offshore/types.hpp"

#include <cstddef>
#include <vector>

namespace offshore
{
    struct Point2
    {
        double x = 0.0; // m
        double y = 0.0; // m
    };

    double distance(const Point2 &a, const Point2 &b);

    // Node placement and radio parameters of one scenario
    struct ScenarioGeometry
    {
        Point2 bs_position;
        Point2 ris_position;
        std::vector<Point2> vessel_positions;
        double h_bs = 50.0;         // BS antenna height (m)
        double h_ris = 15.0;        // RIS height (m)
        double h_vessel = 10.0;     // Vessel antenna height (m)
        double carrier_freq = 5.8e9; // Hz
        double bandwidth = 20.0e6;   // Hz

        double wavelength() const { return speed_of_light / carrier_freq; }
        std::size_t num_vessels() const { return vessel_positions.size(); }

        // Throws std::invalid_argument on non-positive heights, non-finite positions or K = 0
        void validate() const;
    };

    // Uniform planar array of n_h x n_v elements with spacing d
    struct UpaGeometry
    {
        unsigned n_h = 8;
        unsigned n_v = 8;
        double spacing = 0.0; // m

        std::size_t size() const { return std::size_t(n_h) * n_v; }
        void validate() const;
    };

    // Single-horn feed illuminating a reconfigurable reflect-array. The feed sits on the array
    // normal through the aperture centre at height feed_height.
    struct RraFeedModel
    {
        UpaGeometry geometry;
        double feed_height = 0.0;      // z_RF (m)
        double pattern_exponent = 6.5; // q
    };

    struct RicianConfig
    {
        double factor = 10.0; // Linear LOS-to-NLOS power ratio

        static RicianConfig from_db(double factor_db) { return {db_to_linear(factor_db)}; }
    };

    // Azimuth in [0, 2pi), elevation measured from the array z-axis in [0, pi]
    struct LinkAngles
    {
        double azimuth = 0.0;
        double elevation = pi / 2.0;
    };

    // Per-vessel channels of one snapshot. h and g are path-loss scaled.
    struct ChannelSet
    {
        std::vector<cvec> direct;        // h_k, BS -> vessel, length N
        std::vector<cvec> ris_to_vessel; // g_k, RIS -> vessel, length M
        cmat bs_to_ris;                  // F, M x N
        cvec transfer;                   // r, length N

        std::vector<cmat> coupling; // A_k = R^H F^H G_k, N x M
        std::vector<cvec> direct_effective; // c_k = R^H h_k, length N

        std::size_t num_vessels() const { return direct.size(); }
        std::size_t num_bs_elements() const { return transfer.n_elem; }
        std::size_t num_ris_elements() const { return bs_to_ris.n_rows; }
    };

    // Two-ray sea-surface path loss (power gain). Throws std::domain_error for non-positive inputs.
    double two_ray_path_loss(double distance_m, double wavelength, double h_t, double h_r);

    // Radio horizon in km for antenna heights in m. Throws std::domain_error on negative heights.
    double radio_horizon_km(double h_t, double h_r);

    // Unit-norm UPA response for azimuth / elevation
    cvec upa_steering(const UpaGeometry &geom, double azimuth, double elevation, double wavelength);

    // Rank-1 LOS matrix rx * tx^H
    cmat los_channel(const cvec &rx_steering, const cvec &tx_steering);

    // sqrt(K/(1+K)) * los + sqrt(1/(1+K)) * NLOS with i.i.d. CN(0,1) NLOS entries
    cmat rician_channel(const cmat &los, double rician_factor, Rng &rng);

    // i.i.d. CN(0,1) matrix, filled column-major
    cmat complex_gaussian(arma::uword n_rows, arma::uword n_cols, Rng &rng);

    // Feed-to-element transfer vector, normalized to unit l2 norm
    cvec rra_transfer_vector(const RraFeedModel &feed, double wavelength);

    // Angles of the direction from one node to another, as seen by the transmitting array
    LinkAngles link_angles(const Point2 &from, double h_from, const Point2 &to, double h_to);

    // A = R^H F^H diag(g), c = R^H h for an arbitrary transfer vector r
    cmat coupling_matrix(const cmat &bs_to_ris, const cvec &ris_to_vessel, const cvec &transfer);
    cvec effective_direct(const cvec &direct, const cvec &transfer);

    // Draws a full channel realization. LOS responses are scaled to unit power per entry before
    // Rician mixing, so every coefficient has unit mean power ahead of path loss.
    // Random draw order: F NLOS (M x N), then for each vessel h NLOS (N) followed by g NLOS (M).
    // Throws std::domain_error if a vessel is colocated with the BS or the RIS.
    ChannelSet build_channel_set(const ScenarioGeometry &geometry,
                                 const UpaGeometry &bs_array,
                                 const UpaGeometry &ris_array,
                                 const RraFeedModel &feed,
                                 const RicianConfig &rician,
                                 Rng &rng);

} // namespace offshore

#endif
