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

#include "offshore/channel_model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace offshore
{
    double distance(const Point2 &a, const Point2 &b)
    {
        return std::hypot(a.x - b.x, a.y - b.y);
    }

    void ScenarioGeometry::validate() const
    {
        if (!(h_bs > 0.0) || !(h_ris > 0.0) || !(h_vessel > 0.0))
            throw std::invalid_argument("Antenna heights must be positive.");
        if (!(carrier_freq > 0.0) || !std::isfinite(carrier_freq))
            throw std::invalid_argument("Carrier frequency must be positive.");
        if (!(bandwidth > 0.0) || !std::isfinite(bandwidth))
            throw std::invalid_argument("Bandwidth must be positive.");
        if (vessel_positions.empty())
            throw std::invalid_argument("Scenario needs at least one vessel.");

        auto finite = [](const Point2 &p) { return std::isfinite(p.x) && std::isfinite(p.y); };
        if (!finite(bs_position) || !finite(ris_position))
            throw std::invalid_argument("BS and RIS positions must be finite.");
        for (const auto &p : vessel_positions)
            if (!finite(p))
                throw std::invalid_argument("Vessel positions must be finite.");
    }

    void UpaGeometry::validate() const
    {
        if (n_h < 1 || n_v < 1)
            throw std::invalid_argument("UPA needs at least one element per axis.");
        if (!(spacing > 0.0) || !std::isfinite(spacing))
            throw std::invalid_argument("UPA element spacing must be positive.");
    }

    double two_ray_path_loss(double distance_m, double wavelength, double h_t, double h_r)
    {
        if (!(distance_m > 0.0))
            throw std::domain_error("Two-ray path loss: distance must be positive, got " + std::to_string(distance_m));
        if (!(wavelength > 0.0) || !(h_t > 0.0) || !(h_r > 0.0))
            throw std::domain_error("Two-ray path loss: wavelength and heights must be positive.");

        const double free_space = wavelength / (4.0 * pi * distance_m);
        const double s = std::sin(2.0 * pi * h_t * h_r / (wavelength * distance_m));
        return free_space * free_space * s * s;
    }

    double radio_horizon_km(double h_t, double h_r)
    {
        if (h_t < 0.0 || h_r < 0.0)
            throw std::domain_error("Radio horizon: heights must be non-negative.");
        return 4.1 * (std::sqrt(h_t) + std::sqrt(h_r));
    }

    cvec upa_steering(const UpaGeometry &geom, double azimuth, double elevation, double wavelength)
    {
        geom.validate();
        if (!(wavelength > 0.0))
            throw std::domain_error("UPA steering: wavelength must be positive.");

        const double k_d = 2.0 * pi / wavelength * geom.spacing;
        const double u = std::sin(azimuth) * std::sin(elevation);
        const double v = std::cos(elevation);
        const double scale = 1.0 / std::sqrt(double(geom.size()));

        // Horizontal index m runs fastest
        cvec out(geom.size());
        for (unsigned n = 0; n < geom.n_v; ++n)
            for (unsigned m = 0; m < geom.n_h; ++m)
                out[n * geom.n_h + m] = std::polar(scale, k_d * (m * u + n * v));
        return out;
    }

    cmat los_channel(const cvec &rx_steering, const cvec &tx_steering)
    {
        return rx_steering * tx_steering.t();
    }

    cmat complex_gaussian(arma::uword n_rows, arma::uword n_cols, Rng &rng)
    {
        std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
        cmat out(n_rows, n_cols);
        for (arma::uword i = 0; i < out.n_elem; ++i)
        {
            const double re = normal(rng);
            const double im = normal(rng);
            out[i] = cplx(re, im);
        }
        return out;
    }

    cmat rician_channel(const cmat &los, double rician_factor, Rng &rng)
    {
        if (!(rician_factor >= 0.0))
            throw std::domain_error("Rician factor must be non-negative.");
        const double w_los = std::sqrt(rician_factor / (1.0 + rician_factor));
        const double w_nlos = std::sqrt(1.0 / (1.0 + rician_factor));
        return w_los * los + w_nlos * complex_gaussian(los.n_rows, los.n_cols, rng);
    }

    cvec rra_transfer_vector(const RraFeedModel &feed, double wavelength)
    {
        const UpaGeometry &g = feed.geometry;
        g.validate();
        if (!(feed.feed_height > 0.0))
            throw std::domain_error("RRA feed height must be positive.");
        if (!(wavelength > 0.0))
            throw std::domain_error("RRA transfer vector: wavelength must be positive.");

        const double x0 = 0.5 * (g.n_h - 1.0);
        const double y0 = 0.5 * (g.n_v - 1.0);

        arma::vec amplitude(g.size());
        arma::vec phase(g.size());
        for (unsigned n = 0; n < g.n_v; ++n)
            for (unsigned m = 0; m < g.n_h; ++m)
            {
                const double x = (m - x0) * g.spacing;
                const double y = (n - y0) * g.spacing;
                const double s = std::sqrt(x * x + y * y + feed.feed_height * feed.feed_height);
                const double cos_w = feed.feed_height / s; // cos(arccos(z/S))
                const arma::uword i = n * g.n_h + m;
                amplitude[i] = std::pow(cos_w, feed.pattern_exponent);
                phase[i] = 2.0 * pi * s / wavelength;
            }

        const double gamma = 1.0 / arma::norm(amplitude, 2);
        cvec r(g.size());
        for (arma::uword i = 0; i < r.n_elem; ++i)
            r[i] = std::polar(gamma * amplitude[i], phase[i]);
        return r;
    }

    LinkAngles link_angles(const Point2 &from, double h_from, const Point2 &to, double h_to)
    {
        const double dx = to.x - from.x;
        const double dy = to.y - from.y;
        double azimuth = std::atan2(dy, dx);
        if (azimuth < 0.0)
            azimuth += 2.0 * pi;
        if (azimuth >= 2.0 * pi)
            azimuth = 0.0;
        const double elevation = std::atan2(std::hypot(dx, dy), h_to - h_from);
        return {azimuth, elevation};
    }

    cmat coupling_matrix(const cmat &bs_to_ris, const cvec &ris_to_vessel, const cvec &transfer)
    {
        // diag(conj(r)) * F^H * diag(g)
        cmat a = bs_to_ris.t();
        a.each_col() %= arma::conj(transfer);
        a.each_row() %= ris_to_vessel.st();
        return a;
    }

    cvec effective_direct(const cvec &direct, const cvec &transfer)
    {
        return arma::conj(transfer) % direct;
    }

    ChannelSet build_channel_set(const ScenarioGeometry &geometry,
                                 const UpaGeometry &bs_array,
                                 const UpaGeometry &ris_array,
                                 const RraFeedModel &feed,
                                 const RicianConfig &rician,
                                 Rng &rng)
    {
        geometry.validate();
        bs_array.validate();
        ris_array.validate();
        if (feed.geometry.size() != bs_array.size())
            throw std::invalid_argument("RRA feed geometry does not match the BS array size.");

        const double lambda = geometry.wavelength();
        const Point2 &bs = geometry.bs_position;
        const Point2 &ris = geometry.ris_position;

        const double l_bs_ris = distance(bs, ris);
        if (!(l_bs_ris > 0.0))
            throw std::domain_error("BS and RIS are colocated.");

        ChannelSet ch;
        ch.transfer = rra_transfer_vector(feed, lambda);

        // BS -> RIS: departure at the BS array, arrival at the RIS
        const LinkAngles dep_bs_ris = link_angles(bs, geometry.h_bs, ris, geometry.h_ris);
        const LinkAngles arr_bs_ris = link_angles(ris, geometry.h_ris, bs, geometry.h_bs);
        // LOS terms are scaled to unit power per entry, matching the NLOS entries, so the
        // Rician factor is the LOS-to-scattered power ratio of every coefficient
        const cmat f_los = std::sqrt(double(ris_array.size() * bs_array.size())) * los_channel(upa_steering(ris_array, arr_bs_ris.azimuth, arr_bs_ris.elevation, lambda),
                                       upa_steering(bs_array, dep_bs_ris.azimuth, dep_bs_ris.elevation, lambda));
        ch.bs_to_ris = rician_channel(f_los, rician.factor, rng);

        const std::size_t n_vessels = geometry.num_vessels();
        ch.direct.reserve(n_vessels);
        ch.ris_to_vessel.reserve(n_vessels);
        ch.coupling.reserve(n_vessels);
        ch.direct_effective.reserve(n_vessels);

        for (std::size_t k = 0; k < n_vessels; ++k)
        {
            const Point2 &vessel = geometry.vessel_positions[k];
            const double l_direct = distance(bs, vessel);
            const double l_ris_vessel = distance(ris, vessel);
            if (!(l_direct > 0.0))
                throw std::domain_error("Vessel " + std::to_string(k) + " is colocated with the BS.");
            if (!(l_ris_vessel > 0.0))
                throw std::domain_error("Vessel " + std::to_string(k) + " is colocated with the RIS.");

            const double loss_direct = two_ray_path_loss(l_direct, lambda, geometry.h_bs, geometry.h_vessel);
            const double loss_reflected = two_ray_path_loss(l_bs_ris + l_ris_vessel, lambda, geometry.h_ris, geometry.h_vessel);

            // Single-antenna receivers: the LOS vectors are the transmit-side responses
            const LinkAngles dep_direct = link_angles(bs, geometry.h_bs, vessel, geometry.h_vessel);
            const LinkAngles dep_ris = link_angles(ris, geometry.h_ris, vessel, geometry.h_vessel);
            const cvec h_los = std::sqrt(double(bs_array.size())) *
                               upa_steering(bs_array, dep_direct.azimuth, dep_direct.elevation, lambda);
            const cvec g_los = std::sqrt(double(ris_array.size())) *
                               upa_steering(ris_array, dep_ris.azimuth, dep_ris.elevation, lambda);

            cvec h = rician_channel(cmat(h_los), rician.factor, rng).col(0);
            cvec g = rician_channel(cmat(g_los), rician.factor, rng).col(0);
            h *= std::sqrt(loss_direct);
            g *= std::sqrt(loss_reflected);

            ch.coupling.push_back(coupling_matrix(ch.bs_to_ris, g, ch.transfer));
            ch.direct_effective.push_back(effective_direct(h, ch.transfer));
            ch.direct.push_back(std::move(h));
            ch.ris_to_vessel.push_back(std::move(g));
        }
        return ch;
    }

} // namespace offshore
