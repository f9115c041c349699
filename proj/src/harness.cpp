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

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstring>
#include <exception>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

namespace offshore
{
    namespace
    {
        std::uint64_t splitmix64(std::uint64_t x)
        {
            x += 0x9e3779b97f4a7c15ULL;
            x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
            x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
            return x ^ (x >> 31);
        }

        struct Fnv1a
        {
            std::uint64_t state = 0xcbf29ce484222325ULL;

            void add(const void *data, std::size_t len)
            {
                const auto *p = static_cast<const unsigned char *>(data);
                for (std::size_t i = 0; i < len; ++i)
                {
                    state ^= p[i];
                    state *= 0x100000001b3ULL;
                }
            }

            template <typename T>
            void add(const T &m)
            {
                add(m.memptr(), m.n_elem * sizeof(cplx));
            }
        };

        // Beams of every configured scheme for one draw; unsupported or failing schemes keep their error
        struct DesignedScheme
        {
            SchemeId id;
            std::optional<SchemeBeams> beams;
            bool supported = true;
            std::string error;
        };

        std::vector<DesignedScheme> design_all(const SimConfig &cfg, const SnapshotDraw &draw)
        {
            std::vector<DesignedScheme> out;
            out.reserve(cfg.schemes.size());
            for (SchemeId id : cfg.schemes)
            {
                DesignedScheme d{id, std::nullopt, scheme_supported(id), {}};
                if (!d.supported)
                    d.error = "unsupported scheme: " + std::string(scheme_name(id));
                else
                {
                    try
                    {
                        d.beams = design_beams(id, draw.channels, cfg.solver);
                    }
                    catch (const std::exception &e)
                    {
                        d.error = e.what();
                    }
                }
                out.push_back(std::move(d));
            }
            return out;
        }

        SnapshotRecord evaluate_draw(const SimConfig &cfg, const SnapshotDraw &draw, std::uint64_t hash,
                                     std::span<const DesignedScheme> designed, double power_dbm)
        {
            SnapshotRecord rec;
            rec.index = draw.index;
            rec.seed = draw.seed;
            rec.power_dbm = power_dbm;
            rec.channel_hash = hash;
            rec.vessels = draw.vessels;
            rec.rate_floors = draw.rate_floors;

            const double snr_scale = dbm_to_watt(power_dbm) / cfg.noise_power();
            for (const DesignedScheme &d : designed)
            {
                SchemeRecord sr;
                sr.scheme = d.id;
                sr.supported = d.supported;
                sr.error = d.error;
                if (d.beams)
                {
                    try
                    {
                        BeamSolution sol = evaluate_beams(*d.beams, snr_scale, draw.rate_floors);
                        sr.feasible = sol.feasible;
                        sr.esr = sol.esr;
                        sr.rates = std::move(sol.rates);
                        sr.time_share = std::move(sol.time_share);
                        sr.outer_iterations = std::move(sol.outer_iterations);
                    }
                    catch (const std::exception &e)
                    {
                        sr.error = e.what();
                    }
                }
                rec.schemes.push_back(std::move(sr));
            }
            return rec;
        }
    } // namespace

    std::uint64_t snapshot_seed(std::uint64_t master_seed, std::uint64_t index)
    {
        return splitmix64(splitmix64(master_seed) ^ splitmix64(index + 0x632be59bd9b4e019ULL));
    }

    std::vector<Point2> sample_vessels(Rng &rng, double l_max, std::size_t count)
    {
        if (!(l_max > 0.0))
            throw std::invalid_argument("sample_vessels: l_max must be positive.");
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        std::vector<Point2> out;
        out.reserve(count);
        for (std::size_t k = 0; k < count; ++k)
        {
            // sqrt-radius transform keeps the density uniform in area
            const double radius = l_max * std::sqrt(unit(rng));
            const double angle = pi * (unit(rng) - 0.5);
            out.push_back({radius * std::cos(angle), radius * std::sin(angle)});
        }
        return out;
    }

    double rate_floor_cap(double rho_max_w, std::size_t n_elements, double path_loss_at_l_max, double noise_power)
    {
        if (!(rho_max_w > 0.0) || n_elements == 0 || !(path_loss_at_l_max >= 0.0) || !(noise_power > 0.0))
            throw std::invalid_argument("rate_floor_cap: arguments must be positive.");
        return std::log2(1.0 + rho_max_w * double(n_elements) * path_loss_at_l_max / noise_power);
    }

    double rate_floor_cap(const SimConfig &cfg)
    {
        const double loss = two_ray_path_loss(cfg.l_max, cfg.wavelength(), cfg.h_bs, cfg.h_vessel);
        return rate_floor_cap(dbm_to_watt(cfg.rate_floor_power_dbm), cfg.bs_array().size(), loss, cfg.noise_power());
    }

    std::vector<double> sample_rate_floors(Rng &rng, double cap, std::size_t count)
    {
        if (!(cap >= 0.0))
            throw std::invalid_argument("sample_rate_floors: cap must be non-negative.");
        std::uniform_real_distribution<double> dist(0.0, cap);
        std::vector<double> out(count);
        for (double &b : out)
            b = dist(rng);
        return out;
    }

    std::uint64_t channel_hash(const ChannelSet &channels)
    {
        Fnv1a h;
        h.add(channels.bs_to_ris);
        h.add(channels.transfer);
        for (std::size_t k = 0; k < channels.num_vessels(); ++k)
        {
            h.add(channels.direct[k]);
            h.add(channels.ris_to_vessel[k]);
            h.add(channels.coupling[k]);
            h.add(channels.direct_effective[k]);
        }
        return h.state;
    }

    SnapshotDraw draw_snapshot(const SimConfig &cfg, std::size_t index)
    {
        SnapshotDraw draw;
        draw.index = index;
        draw.seed = snapshot_seed(cfg.master_seed, index);
        Rng rng(draw.seed);

        draw.vessels = sample_vessels(rng, cfg.l_max, cfg.num_vessels);
        draw.rate_floors = sample_rate_floors(rng, rate_floor_cap(cfg), cfg.num_vessels);
        draw.channels = build_channel_set(cfg.geometry(draw.vessels), cfg.bs_array(), cfg.ris_array(), cfg.feed(),
                                          cfg.rician(), rng);
        return draw;
    }

    SnapshotRecord run_snapshot(const SimConfig &cfg, double power_dbm, std::size_t index)
    {
        const SnapshotDraw draw = draw_snapshot(cfg, index);
        const auto designed = design_all(cfg, draw);
        return evaluate_draw(cfg, draw, channel_hash(draw.channels), designed, power_dbm);
    }

    double SchemeMetrics::cdf(double x) const
    {
        if (esr_samples.empty())
            return 0.0;
        const auto it = std::upper_bound(esr_samples.begin(), esr_samples.end(), x);
        return double(it - esr_samples.begin()) / double(esr_samples.size());
    }

    std::vector<SchemeMetrics> aggregate(std::span<const SnapshotRecord> records)
    {
        if (records.empty())
            throw std::invalid_argument("aggregate: no records.");

        std::vector<SchemeId> order;
        std::map<double, std::map<int, SchemeMetrics>> groups;
        for (const SnapshotRecord &rec : records)
            for (const SchemeRecord &s : rec.schemes)
            {
                if (std::find(order.begin(), order.end(), s.scheme) == order.end())
                    order.push_back(s.scheme);
                SchemeMetrics &m = groups[rec.power_dbm][int(s.scheme)];
                m.scheme = s.scheme;
                m.power_dbm = rec.power_dbm;
                ++m.n_total;
                if (s.feasible && s.error.empty())
                {
                    ++m.n_feasible;
                    m.esr_samples.push_back(s.esr);
                }
            }

        std::vector<SchemeMetrics> out;
        for (auto &[power, by_scheme] : groups)
            for (SchemeId id : order)
            {
                auto it = by_scheme.find(int(id));
                if (it == by_scheme.end())
                    continue;
                SchemeMetrics m = std::move(it->second);
                m.sr = double(m.n_feasible) / double(m.n_total);
                std::sort(m.esr_samples.begin(), m.esr_samples.end());
                if (m.n_feasible > 0)
                {
                    // Sorted-order sum makes the mean independent of record order
                    double sum = 0.0;
                    for (double v : m.esr_samples)
                        sum += v;
                    m.mean_esr = sum / double(m.n_feasible);
                }
                out.push_back(std::move(m));
            }
        return out;
    }

    std::vector<std::string> trend_diagnostics(std::span<const SchemeMetrics> metrics)
    {
        std::map<int, std::vector<const SchemeMetrics *>> by_scheme;
        for (const SchemeMetrics &m : metrics)
            by_scheme[int(m.scheme)].push_back(&m);

        std::vector<std::string> out;
        for (auto &[id, list] : by_scheme)
        {
            std::sort(list.begin(), list.end(),
                      [](const SchemeMetrics *a, const SchemeMetrics *b) { return a->power_dbm < b->power_dbm; });
            for (std::size_t i = 1; i < list.size(); ++i)
            {
                const SchemeMetrics &lo = *list[i - 1];
                const SchemeMetrics &hi = *list[i];
                std::ostringstream msg;
                if (hi.sr < lo.sr)
                {
                    msg << scheme_name(hi.scheme) << ": SR drops from " << lo.sr << " at " << lo.power_dbm << " dBm to "
                        << hi.sr << " at " << hi.power_dbm << " dBm";
                    out.push_back(msg.str());
                    msg.str("");
                }
                if (lo.mean_esr && hi.mean_esr && *hi.mean_esr < *lo.mean_esr)
                {
                    msg << scheme_name(hi.scheme) << ": mean ESR drops from " << *lo.mean_esr << " at " << lo.power_dbm
                        << " dBm to " << *hi.mean_esr << " at " << hi.power_dbm << " dBm";
                    out.push_back(msg.str());
                }
            }
        }
        return out;
    }

    SweepResult power_sweep(const SimConfig &cfg, const ProgressCallback &progress)
    {
        cfg.validate();
        const std::size_t n = cfg.n_snapshots;
        const std::size_t n_power = cfg.power_dbm.size();

        // per_index[i][p] is snapshot i at power point p
        std::vector<std::vector<SnapshotRecord>> per_index(n);
        std::atomic<std::size_t> next{0};
        std::atomic<std::size_t> done{0};
        std::mutex progress_mutex;

        std::exception_ptr failure;
        std::mutex failure_mutex;

        auto worker = [&]() {
            for (std::size_t i = next++; i < n; i = next++)
            try
            {
                const SnapshotDraw draw = draw_snapshot(cfg, i);
                const std::uint64_t hash = channel_hash(draw.channels);
                const auto designed = design_all(cfg, draw);
                std::vector<SnapshotRecord> recs;
                recs.reserve(n_power);
                for (double p : cfg.power_dbm)
                    recs.push_back(evaluate_draw(cfg, draw, hash, designed, p));
                per_index[i] = std::move(recs);

                const std::size_t finished = ++done;
                if (progress)
                {
                    std::lock_guard lock(progress_mutex);
                    progress(finished, n);
                }
            }
            catch (...)
            {
                std::lock_guard lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
                next = n;
            }
        };

        const unsigned n_threads = std::max(1u, std::min<unsigned>(cfg.threads, unsigned(n)));
        if (n_threads == 1)
            worker();
        else
        {
            std::vector<std::jthread> pool;
            for (unsigned t = 0; t < n_threads; ++t)
                pool.emplace_back(worker);
        }

        if (failure)
            std::rethrow_exception(failure);

        SweepResult result;
        result.records.reserve(n * n_power);
        for (std::size_t p = 0; p < n_power; ++p)
            for (std::size_t i = 0; i < n; ++i)
                result.records.push_back(std::move(per_index[i][p]));
        result.metrics = aggregate(result.records);
        result.diagnostics = trend_diagnostics(result.metrics);
        return result;
    }

} // namespace offshore
