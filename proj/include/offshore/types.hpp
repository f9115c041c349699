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

#ifndef OFFSHORE_TYPES_HPP
#define OFFSHORE_TYPES_HPP

#include <armadillo>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>

namespace offshore
{
    using cplx = std::complex<double>;
    using cvec = arma::cx_vec;
    using cmat = arma::cx_mat;

    // All random draws go through this engine. Its output sequence is fixed by the standard,
    // which keeps seeded runs bit-reproducible.
    using Rng = std::mt19937_64;

    inline constexpr double speed_of_light = 299792458.0;
    inline constexpr double pi = std::numbers::pi;

    // Unit conversions used at config boundaries only
    inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
    inline double dbm_to_watt(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

    // Entry-wise e^{j*arg(v)} with arg(0) = 0
    inline cvec unit_phase(const cvec &v)
    {
        cvec out(v.n_elem);
        for (arma::uword i = 0; i < v.n_elem; ++i)
        {
            const double mag = std::abs(v[i]);
            out[i] = (mag == 0.0) ? cplx(1.0, 0.0) : v[i] / mag;
        }
        return out;
    }

} // namespace offshore

#endif
