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

#include "offshore/sim_config.hpp"

#include "json.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

using json = nlohmann::json;

namespace offshore
{
    RraFeedModel SimConfig::feed() const
    {
        const UpaGeometry g = bs_array();
        const double height = feed_height.value_or(std::sqrt(double(g.size())) * g.spacing);
        return {g, height, feed_pattern_exponent};
    }

    double SimConfig::noise_power() const
    {
        return dbm_to_watt(noise_psd_dbm_hz) * bandwidth;
    }

    ScenarioGeometry SimConfig::geometry(std::vector<Point2> vessels) const
    {
        ScenarioGeometry g;
        g.bs_position = bs_position;
        g.ris_position = ris_position;
        g.vessel_positions = std::move(vessels);
        g.h_bs = h_bs;
        g.h_ris = h_ris;
        g.h_vessel = h_vessel;
        g.carrier_freq = carrier_freq;
        g.bandwidth = bandwidth;
        return g;
    }

    void SimConfig::validate() const
    {
        auto require = [](bool ok, const char *msg) {
            if (!ok)
                throw ConfigError(msg);
        };
        auto finite = [](double v) { return std::isfinite(v); };

        require(finite(bs_position.x) && finite(bs_position.y), "scenario.bs_position_m must be finite");
        require(finite(ris_position.x) && finite(ris_position.y), "scenario.ris_position_m must be finite");
        require(h_bs > 0.0 && h_ris > 0.0 && h_vessel > 0.0, "antenna heights must be positive");
        require(carrier_freq > 0.0 && finite(carrier_freq), "scenario.carrier_freq_hz must be positive");
        require(bandwidth > 0.0 && finite(bandwidth), "scenario.bandwidth_hz must be positive");
        require(finite(noise_psd_dbm_hz), "scenario.noise_psd_dbm_hz must be finite");
        require(num_vessels >= 1, "scenario.num_vessels must be at least 1");
        require(l_max > 0.0 && finite(l_max), "scenario.l_max_m must be positive");
        require(bs_n_h >= 1 && bs_n_v >= 1, "arrays.bs needs at least one element per axis");
        require(ris_n_h >= 1 && ris_n_v >= 1, "arrays.ris needs at least one element per axis");
        require(spacing_wavelengths > 0.0 && finite(spacing_wavelengths), "arrays.spacing_wavelengths must be positive");
        require(finite(feed_pattern_exponent) && feed_pattern_exponent >= 0.0, "feed.pattern_exponent must be non-negative");
        require(!feed_height || (*feed_height > 0.0 && finite(*feed_height)), "feed.height_m must be positive");
        require(finite(rician_factor_db), "channel.rician_factor_db must be finite");
        require(!power_dbm.empty(), "experiment.power_dbm must not be empty");
        for (double p : power_dbm)
            require(finite(p), "experiment.power_dbm values must be finite");
        require(finite(rate_floor_power_dbm), "experiment.rate_floor_power_dbm must be finite");
        require(n_snapshots >= 1, "experiment.n_snapshots must be at least 1");
        require(!schemes.empty(), "experiment.schemes must not be empty");
        require(threads >= 1, "experiment.threads must be at least 1");
        try
        {
            solver.validate();
        }
        catch (const std::invalid_argument &e)
        {
            throw ConfigError(std::string("solver: ") + e.what());
        }
    }

    namespace
    {
        // Key-checked view of one JSON object
        class Section
        {
        public:
            Section(const json &node, std::string path, std::set<std::string> allowed) : node_(node), path_(std::move(path))
            {
                if (!node_.is_object())
                    throw ConfigError(path_ + " must be an object");
                for (const auto &item : node_.items())
                    if (!allowed.contains(item.key()))
                        throw ConfigError("unknown key '" + qualified(item.key()) + "'");
            }

            bool has(const std::string &key) const { return node_.contains(key) && !node_.at(key).is_null(); }

            const json &at(const std::string &key) const { return node_.at(key); }

            std::string qualified(const std::string &key) const { return path_.empty() ? key : path_ + "." + key; }

            void read(const std::string &key, double &out) const
            {
                if (!has(key))
                    return;
                if (!at(key).is_number())
                    throw ConfigError(qualified(key) + " must be a number");
                out = at(key).get<double>();
            }

            template <typename Int>
            void read_count(const std::string &key, Int &out) const
            {
                if (!has(key))
                    return;
                const json &v = at(key);
                if (!v.is_number_unsigned())
                    throw ConfigError(qualified(key) + " must be a non-negative integer");
                const auto raw = v.get<std::uint64_t>();
                if (raw > static_cast<std::uint64_t>(std::numeric_limits<Int>::max()))
                    throw ConfigError(qualified(key) + " is out of range");
                out = static_cast<Int>(raw);
            }

            void read(const std::string &key, Point2 &out) const
            {
                if (!has(key))
                    return;
                const json &v = at(key);
                if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
                    throw ConfigError(qualified(key) + " must be a two-element numeric array [x, y]");
                out = {v[0].get<double>(), v[1].get<double>()};
            }

            void read(const std::string &key, std::string &out) const
            {
                if (!has(key))
                    return;
                if (!at(key).is_string())
                    throw ConfigError(qualified(key) + " must be a string");
                out = at(key).get<std::string>();
            }

        private:
            const json &node_;
            std::string path_;
        };

        void read_upa(const Section &parent, const std::string &key, unsigned &n_h, unsigned &n_v)
        {
            if (!parent.has(key))
                return;
            Section s(parent.at(key), parent.qualified(key), {"n_h", "n_v"});
            s.read_count("n_h", n_h);
            s.read_count("n_v", n_v);
        }
    } // namespace

    SimConfig parse_config(const std::string &json_text)
    {
        json root;
        try
        {
            root = json::parse(json_text);
        }
        catch (const json::parse_error &e)
        {
            throw ConfigError(std::string("config is not valid JSON: ") + e.what());
        }

        SimConfig cfg;
        Section top(root, "", {"scenario", "arrays", "feed", "channel", "solver", "experiment", "output"});

        if (top.has("scenario"))
        {
            Section s(top.at("scenario"), "scenario",
                      {"bs_position_m", "ris_position_m", "h_bs_m", "h_ris_m", "h_vessel_m", "carrier_freq_hz",
                       "bandwidth_hz", "noise_psd_dbm_hz", "num_vessels", "l_max_m"});
            s.read("bs_position_m", cfg.bs_position);
            s.read("ris_position_m", cfg.ris_position);
            s.read("h_bs_m", cfg.h_bs);
            s.read("h_ris_m", cfg.h_ris);
            s.read("h_vessel_m", cfg.h_vessel);
            s.read("carrier_freq_hz", cfg.carrier_freq);
            s.read("bandwidth_hz", cfg.bandwidth);
            s.read("noise_psd_dbm_hz", cfg.noise_psd_dbm_hz);
            s.read_count("num_vessels", cfg.num_vessels);
            s.read("l_max_m", cfg.l_max);
        }

        if (top.has("arrays"))
        {
            Section s(top.at("arrays"), "arrays", {"bs", "ris", "spacing_wavelengths"});
            read_upa(s, "bs", cfg.bs_n_h, cfg.bs_n_v);
            read_upa(s, "ris", cfg.ris_n_h, cfg.ris_n_v);
            s.read("spacing_wavelengths", cfg.spacing_wavelengths);
        }

        if (top.has("feed"))
        {
            Section s(top.at("feed"), "feed", {"pattern_exponent", "height_m"});
            s.read("pattern_exponent", cfg.feed_pattern_exponent);
            if (s.has("height_m"))
            {
                double h = 0.0;
                s.read("height_m", h);
                cfg.feed_height = h;
            }
        }

        if (top.has("channel"))
        {
            Section s(top.at("channel"), "channel", {"rician_factor_db"});
            s.read("rician_factor_db", cfg.rician_factor_db);
        }

        if (top.has("solver"))
        {
            Section s(top.at("solver"), "solver", {"outer_tolerance", "inner_tolerance", "max_outer", "max_inner"});
            s.read("outer_tolerance", cfg.solver.outer_tolerance);
            s.read("inner_tolerance", cfg.solver.inner_tolerance);
            s.read_count("max_outer", cfg.solver.max_outer);
            s.read_count("max_inner", cfg.solver.max_inner);
        }

        if (top.has("experiment"))
        {
            Section s(top.at("experiment"), "experiment",
                      {"power_dbm", "rate_floor_power_dbm", "n_snapshots", "master_seed", "schemes", "threads"});
            if (s.has("power_dbm"))
            {
                const json &v = s.at("power_dbm");
                if (!v.is_array())
                    throw ConfigError("experiment.power_dbm must be an array of numbers");
                cfg.power_dbm.clear();
                for (const auto &p : v)
                {
                    if (!p.is_number())
                        throw ConfigError("experiment.power_dbm must be an array of numbers");
                    cfg.power_dbm.push_back(p.get<double>());
                }
            }
            s.read("rate_floor_power_dbm", cfg.rate_floor_power_dbm);
            s.read_count("n_snapshots", cfg.n_snapshots);
            s.read_count("master_seed", cfg.master_seed);
            s.read_count("threads", cfg.threads);
            if (s.has("schemes"))
            {
                const json &v = s.at("schemes");
                if (!v.is_array())
                    throw ConfigError("experiment.schemes must be an array of scheme names");
                cfg.schemes.clear();
                for (const auto &name : v)
                {
                    if (!name.is_string())
                        throw ConfigError("experiment.schemes must be an array of scheme names");
                    const auto id = parse_scheme(name.get<std::string>());
                    if (!id)
                        throw ConfigError("unknown scheme '" + name.get<std::string>() + "'");
                    cfg.schemes.push_back(*id);
                }
            }
        }

        if (top.has("output"))
        {
            Section s(top.at("output"), "output", {"dir"});
            s.read("dir", cfg.output_dir);
        }

        cfg.validate();
        return cfg;
    }

    SimConfig load_config(const std::string &path)
    {
        std::ifstream in(path);
        if (!in)
            throw ConfigError("cannot open config file '" + path + "'");
        std::stringstream buf;
        buf << in.rdbuf();
        return parse_config(buf.str());
    }

    std::string dump_config(const SimConfig &cfg)
    {
        json schemes = json::array();
        for (SchemeId id : cfg.schemes)
            schemes.push_back(std::string(scheme_name(id)));

        json root = {
            {"scenario",
             {{"bs_position_m", {cfg.bs_position.x, cfg.bs_position.y}},
              {"ris_position_m", {cfg.ris_position.x, cfg.ris_position.y}},
              {"h_bs_m", cfg.h_bs},
              {"h_ris_m", cfg.h_ris},
              {"h_vessel_m", cfg.h_vessel},
              {"carrier_freq_hz", cfg.carrier_freq},
              {"bandwidth_hz", cfg.bandwidth},
              {"noise_psd_dbm_hz", cfg.noise_psd_dbm_hz},
              {"num_vessels", cfg.num_vessels},
              {"l_max_m", cfg.l_max}}},
            {"arrays",
             {{"bs", {{"n_h", cfg.bs_n_h}, {"n_v", cfg.bs_n_v}}},
              {"ris", {{"n_h", cfg.ris_n_h}, {"n_v", cfg.ris_n_v}}},
              {"spacing_wavelengths", cfg.spacing_wavelengths}}},
            {"feed",
             {{"pattern_exponent", cfg.feed_pattern_exponent},
              {"height_m", cfg.feed_height ? json(*cfg.feed_height) : json(nullptr)}}},
            {"channel", {{"rician_factor_db", cfg.rician_factor_db}}},
            {"solver",
             {{"outer_tolerance", cfg.solver.outer_tolerance},
              {"inner_tolerance", cfg.solver.inner_tolerance},
              {"max_outer", cfg.solver.max_outer},
              {"max_inner", cfg.solver.max_inner}}},
            {"experiment",
             {{"power_dbm", cfg.power_dbm},
              {"rate_floor_power_dbm", cfg.rate_floor_power_dbm},
              {"n_snapshots", cfg.n_snapshots},
              {"master_seed", cfg.master_seed},
              {"schemes", schemes},
              {"threads", cfg.threads}}},
            {"output", {{"dir", cfg.output_dir}}}};
        return root.dump(2);
    }

} // namespace offshore
