// SPDX-License-Identifier: Apache-2.0
//
// bslice: beam-slicing jammer mitigation simulator for quantized massive MU-MIMO
// Copyright (C) 2026 The bslice Authors
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

#include "bslice/config.hpp"

#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <sstream>

namespace bslice
{
    namespace
    {
        // A config value together with where it came from, for error messages.
        struct Entry
        {
            YAML::Node node;
            std::string where;
        };

        [[noreturn]] void fail(const Entry &e, const std::string &msg)
        {
            throw ConfigError(e.where + ": " + msg);
        }

        std::string scalar(const Entry &e, const YAML::Node &n)
        {
            if (!n.IsScalar())
                fail(e, "expected a scalar value");
            return n.Scalar();
        }

        std::vector<YAML::Node> items(const Entry &e)
        {
            if (e.node.IsSequence())
            {
                std::vector<YAML::Node> out(e.node.begin(), e.node.end());
                return out;
            }
            if (e.node.IsScalar())
                return {e.node};
            fail(e, "expected a scalar or a list");
        }

        long long to_int(const Entry &e, const YAML::Node &n)
        {
            const std::string s = scalar(e, n);
            std::size_t used = 0;
            long long v = 0;
            try
            {
                v = std::stoll(s, &used);
            }
            catch (const std::exception &)
            {
                used = 0;
            }
            if (used == 0 || used != s.size())
                fail(e, "expected an integer, got '" + s + "'");
            return v;
        }

        double to_double(const Entry &e, const YAML::Node &n)
        {
            std::string s = scalar(e, n);
            std::string lower = s;
            std::transform(lower.begin(), lower.end(), lower.begin(), ::tolower);
            if (lower == "-inf" || lower == "-.inf")
                return -std::numeric_limits<double>::infinity();
            if (lower == "inf" || lower == ".inf" || lower == "+inf" || lower == "+.inf")
                return std::numeric_limits<double>::infinity();
            std::size_t used = 0;
            double v = 0.0;
            try
            {
                v = std::stod(s, &used);
            }
            catch (const std::exception &)
            {
                used = 0;
            }
            if (used == 0 || used != s.size())
                fail(e, "expected a number, got '" + s + "'");
            return v;
        }

        template <typename T, typename F>
        std::vector<T> list_of(const Entry &e, F &&convert)
        {
            std::vector<T> out;
            for (const auto &n : items(e))
            {
                try
                {
                    out.push_back(convert(n));
                }
                catch (const ConfigError &)
                {
                    throw;
                }
                catch (const std::exception &ex)
                {
                    fail(e, ex.what());
                }
            }
            return out;
        }

        template <typename T, typename F>
        T one_of(const Entry &e, F &&convert)
        {
            if (!e.node.IsScalar())
                fail(e, "expected a single value");
            try
            {
                return convert(e.node);
            }
            catch (const ConfigError &)
            {
                throw;
            }
            catch (const std::exception &ex)
            {
                fail(e, ex.what());
            }
        }

        using Setter = std::function<void(RunConfig &, const Entry &)>;

        int positive_int(const Entry &e, const YAML::Node &n)
        {
            const auto v = to_int(e, n);
            if (v < 1 || v > std::numeric_limits<int>::max())
                fail(e, "expected a positive integer");
            return (int)v;
        }

        const std::map<std::string, Setter> &setters()
        {
            static const std::map<std::string, Setter> table = []
            {
                std::map<std::string, Setter> t;
                auto text = [](const Entry &e) { return one_of<std::string>(e, [&](const YAML::Node &n) { return scalar(e, n); }); };
                auto pint = [](const Entry &e) { return one_of<int>(e, [&](const YAML::Node &n) { return positive_int(e, n); }); };
                auto num = [](const Entry &e) { return one_of<double>(e, [&](const YAML::Node &n) { return to_double(e, n); }); };

                t["scenario"] = [=](RunConfig &c, const Entry &e) { c.sweep.scenario = text(e); };
                t["B"] = [=](RunConfig &c, const Entry &e) { c.sweep.base.scenario.B = pint(e); };
                t["U"] = [=](RunConfig &c, const Entry &e) { c.sweep.base.scenario.U = pint(e); };
                t["sector_halfwidth"] = [=](RunConfig &c, const Entry &e) { c.sweep.base.scenario.sector_halfwidth = num(e); };
                t["dist_min"] = [=](RunConfig &c, const Entry &e) { c.sweep.base.scenario.dist_min = num(e); };
                t["dist_max"] = [=](RunConfig &c, const Entry &e) { c.sweep.base.scenario.dist_max = num(e); };
                t["min_sep"] = [=](RunConfig &c, const Entry &e) { c.sweep.base.scenario.min_sep = num(e); };
                t["power_control_db"] = [=](RunConfig &c, const Entry &e) { c.sweep.base.scenario.power_control_db = num(e); };
                t["pathloss_exponent"] = [=](RunConfig &c, const Entry &e) { c.sweep.base.scenario.pathloss_exponent = num(e); };
                t["nlos_paths"] = [=](RunConfig &c, const Entry &e) { c.sweep.base.scenario.nlos_paths = pint(e); };
                t["nlos_angle_spread"] = [=](RunConfig &c, const Entry &e) { c.sweep.base.scenario.nlos_angle_spread = num(e); };
                t["Es"] = [=](RunConfig &c, const Entry &e) { c.sweep.base.scenario.Es = num(e); };
                t["constellation"] = [=](RunConfig &c, const Entry &e) { c.sweep.base.constellation = text(e); };
                t["jammer_slots"] = [=](RunConfig &c, const Entry &e) { c.sweep.base.jammer_slots = pint(e); };
                t["data_slots"] = [=](RunConfig &c, const Entry &e) { c.sweep.base.data_slots = pint(e); };
                t["trace_threshold_factor"] = [=](RunConfig &c, const Entry &e) { c.sweep.base.trace_threshold_factor = num(e); };
                t["gain_cap"] = [=](RunConfig &c, const Entry &e) { c.sweep.base.gain_cap = num(e); };
                t["rotation_angles"] = [](RunConfig &c, const Entry &e)
                { c.sweep.base.slicer.custom_phis = list_of<double>(e, [&](const YAML::Node &n) { return to_double(e, n); }); };

                t["channel"] = [](RunConfig &c, const Entry &e)
                { c.sweep.grid.channel = list_of<ChannelKind>(e, [&](const YAML::Node &n) { return parse_channel_kind(scalar(e, n)); }); };
                t["method"] = [](RunConfig &c, const Entry &e)
                { c.sweep.grid.method = list_of<Method>(e, [&](const YAML::Node &n) { return parse_method(scalar(e, n)); }); };
                t["domain"] = [](RunConfig &c, const Entry &e)
                { c.sweep.grid.domain = list_of<Domain>(e, [&](const YAML::Node &n) { return parse_domain(scalar(e, n)); }); };
                t["transform"] = [](RunConfig &c, const Entry &e)
                { c.sweep.grid.transform = list_of<TransformKind>(e, [&](const YAML::Node &n) { return parse_transform_kind(scalar(e, n)); }); };
                t["rotations"] = [](RunConfig &c, const Entry &e)
                { c.sweep.grid.rotations = list_of<RotationMode>(e, [&](const YAML::Node &n) { return parse_rotation_mode(scalar(e, n)); }); };
                t["S"] = [](RunConfig &c, const Entry &e)
                { c.sweep.grid.S = list_of<int>(e, [&](const YAML::Node &n) { return positive_int(e, n); }); };
                t["q"] = [](RunConfig &c, const Entry &e)
                { c.sweep.grid.q = list_of<std::optional<int>>(e, [&](const YAML::Node &n) { return parse_resolution(scalar(e, n)); }); };
                t["rho_db"] = [](RunConfig &c, const Entry &e)
                { c.sweep.grid.rho_db = list_of<double>(e, [&](const YAML::Node &n) { return to_double(e, n); }); };
                t["snr_db"] = [](RunConfig &c, const Entry &e)
                { c.sweep.grid.snr_db = list_of<double>(e, [&](const YAML::Node &n) { return to_double(e, n); }); };

                t["trials"] = [=](RunConfig &c, const Entry &e) { c.sweep.trials = pint(e); };
                t["seed"] = [](RunConfig &c, const Entry &e)
                {
                    c.sweep.base_seed = one_of<std::uint64_t>(e, [&](const YAML::Node &n)
                    {
                        const auto v = to_int(e, n);
                        if (v < 0)
                            fail(e, "seed must be non-negative");
                        return (std::uint64_t)v;
                    });
                };
                t["workers"] = [=](RunConfig &c, const Entry &e) { c.sweep.workers = pint(e); };
                t["out"] = [=](RunConfig &c, const Entry &e) { c.out = text(e); };

                t["grid_points"] = [=](RunConfig &c, const Entry &e) { c.learn.grid_points = pint(e); };
                t["sweeps"] = [=](RunConfig &c, const Entry &e) { c.learn.sweeps = pint(e); };
                t["train_channels"] = [=](RunConfig &c, const Entry &e) { c.learn.train_channels = pint(e); };
                t["learn_snr_db"] = [=](RunConfig &c, const Entry &e) { c.learn.snr_db = num(e); };
                t["learn_rho_db"] = [=](RunConfig &c, const Entry &e) { c.learn.rho_db = num(e); };
                t["eval_channels"] = [=](RunConfig &c, const Entry &e)
                {
                    c.eval_channels = one_of<int>(e, [&](const YAML::Node &n)
                    {
                        const auto v = to_int(e, n);
                        if (v < 0)
                            fail(e, "eval_channels must be non-negative");
                        return (int)v;
                    });
                };
                return t;
            }();
            return table;
        }

        RunConfig defaults()
        {
            RunConfig c;
            auto &g = c.sweep.grid;
            g.channel = {ChannelKind::LoS};
            g.method = {Method::SNIPS};
            g.domain = {Domain::Slice};
            g.transform = {TransformKind::DFT};
            g.rotations = {RotationMode::Uniform};
            g.S = {8};
            g.q = {4};
            g.rho_db = {25.0};
            g.snr_db = {20.0};
            return c;
        }

        void apply(RunConfig &c, const std::string &key, const Entry &e)
        {
            const auto &t = setters();
            const auto it = t.find(key);
            if (it == t.end())
                throw ConfigError(e.where + ": unknown key '" + key + "'");
            it->second(c, e);
        }

        void validate(const RunConfig &c, const std::string &source)
        {
            try
            {
                for (const auto &p : expand_grid(c.sweep))
                    p.cfg.validate();
                c.learn.validate();
            }
            catch (const std::exception &ex)
            {
                throw ConfigError(source + ": invalid configuration: " + ex.what());
            }
        }
    }

    const std::vector<std::string> &known_config_keys()
    {
        static const std::vector<std::string> keys = []
        {
            std::vector<std::string> k;
            for (const auto &[name, fn] : setters())
                k.push_back(name);
            return k;
        }();
        return keys;
    }

    FrameConfig RunConfig::single_point() const
    {
        if (sweep.grid.size() != 1)
            throw ConfigError("run expects exactly one value per grid axis (channel, method, domain, transform, "
                              "rotations, S, q, rho_db, snr_db); use 'sweep' for grids");
        return expand_grid(sweep).front().cfg;
    }

    RunConfig parse_run_config(const std::string &text, const std::string &source,
                               const std::vector<std::string> &overrides)
    {
        RunConfig c = defaults();
        YAML::Node root;
        try
        {
            root = YAML::Load(text);
        }
        catch (const YAML::Exception &ex)
        {
            throw ConfigError(source + ":" + std::to_string(ex.mark.line + 1) + ": " + ex.msg);
        }
        if (root && !root.IsNull())
        {
            if (!root.IsMap())
                throw ConfigError(source + ":1: top level must be a mapping of key: value");
            for (const auto &kv : root)
            {
                const std::string where = source + ":" + std::to_string(kv.first.Mark().line + 1);
                apply(c, kv.first.as<std::string>(), Entry{kv.second, where});
            }
        }
        for (const auto &ov : overrides)
        {
            const std::string where = "--set '" + ov + "'";
            const auto eq = ov.find('=');
            if (eq == std::string::npos || eq == 0)
                throw ConfigError(where + ": expected key=value");
            YAML::Node value;
            try
            {
                value = YAML::Load(ov.substr(eq + 1));
            }
            catch (const YAML::Exception &ex)
            {
                throw ConfigError(where + ": " + ex.msg);
            }
            apply(c, ov.substr(0, eq), Entry{value, where});
        }
        validate(c, source);
        return c;
    }

    RunConfig load_run_config(const std::string &path, const std::vector<std::string> &overrides)
    {
        std::ifstream in(path);
        if (!in)
            throw ConfigError(path + ": cannot open config file");
        std::stringstream ss;
        ss << in.rdbuf();
        return parse_run_config(ss.str(), path, overrides);
    }
}
