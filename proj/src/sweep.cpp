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

#include "bslice/sweep.hpp"

#include <spdlog/spdlog.h>

#include <atomic>
#include <cstdio>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace bslice
{
    std::size_t SweepGrid::size() const
    {
        return channel.size() * method.size() * domain.size() * transform.size() * rotations.size() * S.size() *
               q.size() * rho_db.size() * snr_db.size();
    }

    std::vector<SweepPoint> expand_grid(const SweepSpec &spec)
    {
        const auto &g = spec.grid;
        if (g.size() == 0)
            throw std::invalid_argument("sweep grid is empty (every axis needs at least one value)");
        if (spec.trials < 1)
            throw std::invalid_argument("trials must be at least 1");

        std::vector<SweepPoint> points;
        points.reserve(g.size());
        // The point seed depends only on the channel model, rho and SNR, so every method,
        // domain, slicer and resolution at one operating point sees the same random draws.
        auto seed_of = [&](std::size_t ci, std::size_t ri, std::size_t si)
        { return derive_seed(spec.base_seed, (ci * g.rho_db.size() + ri) * g.snr_db.size() + si); };

        for (std::size_t ci = 0; ci < g.channel.size(); ++ci)
            for (auto m : g.method)
                for (auto dom : g.domain)
                    for (auto tr : g.transform)
                        for (auto rot : g.rotations)
                            for (int S : g.S)
                                for (const auto &q : g.q)
                                    for (std::size_t ri = 0; ri < g.rho_db.size(); ++ri)
                                        for (std::size_t si = 0; si < g.snr_db.size(); ++si)
                                        {
                                            SweepPoint p;
                                            p.index = points.size();
                                            p.cfg = spec.base;
                                            p.cfg.scenario.channel = g.channel[ci];
                                            p.cfg.detector.kind = m;
                                            p.cfg.detector.domain = dom;
                                            p.cfg.detector.adc = q;
                                            p.cfg.slicer.transform = tr;
                                            p.cfg.slicer.rotations = rot;
                                            p.cfg.slicer.S = S;
                                            p.cfg.rho_db = g.rho_db[ri];
                                            p.cfg.snr_db = g.snr_db[si];
                                            p.seed = seed_of(ci, ri, si);
                                            points.push_back(std::move(p));
                                        }
        return points;
    }

    namespace
    {
        std::string fmt_double(double v)
        {
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.17g", v);
            return buf;
        }
    }

    std::string canonical_config(const FrameConfig &cfg, int trials)
    {
        const auto &sc = cfg.scenario;
        std::ostringstream os;
        os << "B=" << sc.B << ";U=" << sc.U << ";sector_halfwidth=" << fmt_double(sc.sector_halfwidth)
           << ";dist_min=" << fmt_double(sc.dist_min) << ";dist_max=" << fmt_double(sc.dist_max)
           << ";min_sep=" << fmt_double(sc.min_sep) << ";power_control_db=" << fmt_double(sc.power_control_db)
           << ";pathloss_exponent=" << fmt_double(sc.pathloss_exponent) << ";nlos_paths=" << sc.nlos_paths
           << ";nlos_angle_spread=" << fmt_double(sc.nlos_angle_spread) << ";Es=" << fmt_double(sc.Es)
           << ";channel=" << to_string(sc.channel) << ";detector=" << cfg.detector.to_string()
           << ";transform=" << to_string(cfg.slicer.transform) << ";S=" << cfg.slicer.S
           << ";rotations=" << to_string(cfg.slicer.rotations);
        if (cfg.slicer.rotations == RotationMode::Custom)
            for (double phi : cfg.slicer.custom_phis)
                os << "," << fmt_double(phi);
        os << ";constellation=" << cfg.constellation << ";jammer_slots=" << cfg.jammer_slots
           << ";data_slots=" << cfg.data_slots << ";snr_db=" << fmt_double(cfg.snr_db)
           << ";rho_db=" << fmt_double(cfg.rho_db) << ";trace_threshold_factor=" << fmt_double(cfg.trace_threshold_factor)
           << ";gain_cap=" << fmt_double(cfg.gain_cap) << ";trials=" << trials;
        return os.str();
    }

    std::string config_hash(const FrameConfig &cfg, int trials)
    {
        return fnv1a_hex(canonical_config(cfg, trials));
    }

    std::string fnv1a_hex(const std::string &text)
    {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (unsigned char c : text)
        {
            h ^= c;
            h *= 0x100000001b3ULL;
        }
        char buf[17];
        std::snprintf(buf, sizeof buf, "%016llx", (unsigned long long)h);
        return buf;
    }

    MetricRecord run_point(const FrameConfig &cfg, int trials, std::uint64_t point_seed, int workers)
    {
        if (trials < 1)
            throw std::invalid_argument("run_point: trials must be at least 1");

        MetricRecord record;
        record.seed = point_seed;
        record.config_hash = config_hash(cfg, trials);

        std::optional<FramePipeline> pipeline;
        try
        {
            pipeline.emplace(cfg);
        }
        catch (const std::exception &e)
        {
            record.failure = e.what();
            return record;
        }

        std::vector<std::optional<TrialMetrics>> slots(trials);
        std::atomic<int> next{0};
        std::atomic<bool> abort{false};
        std::mutex failure_mutex;
        std::optional<std::string> failure;

        auto worker = [&]
        {
            for (int t = next++; t < trials && !abort; t = next++)
            {
                try
                {
                    const auto res = pipeline->run_trial(derive_seed(point_seed, (std::uint64_t)t));
                    slots[t] = TrialMetrics{res.bit_errors, res.bits, res.rmsse};
                }
                catch (const std::exception &e)
                {
                    std::lock_guard lock(failure_mutex);
                    if (!failure)
                        failure = "trial " + std::to_string(t) + ": " + e.what();
                    abort = true;
                }
            }
        };

        const int n_threads = std::max(1, std::min(workers, trials));
        if (n_threads == 1)
            worker();
        else
        {
            std::vector<std::jthread> pool;
            for (int w = 0; w < n_threads; ++w)
                pool.emplace_back(worker);
        }

        if (failure)
        {
            spdlog::error("point {} failed: {}", record.config_hash, *failure);
            record.failure = failure;
            return record;
        }
        for (int t = 0; t < trials; ++t)
            record.add(t, std::move(*slots[t]));
        return record;
    }

    std::vector<SweepRow> run_sweep(const SweepSpec &spec)
    {
        const auto points = expand_grid(spec);
        std::vector<SweepRow> rows;
        rows.reserve(points.size());
        for (const auto &p : points)
        {
            spdlog::info("point {}/{}: {} S={} snr={} rho={}", p.index + 1, points.size(), p.cfg.detector.to_string(), p.cfg.slicer.S,
                         p.cfg.snr_db, p.cfg.rho_db);
            rows.push_back({p, run_point(p.cfg, spec.trials, p.seed, spec.workers)});
        }
        return rows;
    }
}
