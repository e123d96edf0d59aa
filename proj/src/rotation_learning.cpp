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

#include "bslice/rotation_learning.hpp"

#include "bslice/sweep.hpp"

#include <spdlog/spdlog.h>

#include <algorithm>
#include <stdexcept>

namespace bslice
{
    void RotationLearnConfig::validate() const
    {
        if (grid_points < 2)
            throw std::invalid_argument("grid_points must be at least 2");
        if (sweeps < 1)
            throw std::invalid_argument("sweeps must be at least 1");
        if (train_channels < 1)
            throw std::invalid_argument("train_channels must be at least 1");
    }

    FrameConfig learning_frame_config(const FrameConfig &base, const RotationLearnConfig &cfg)
    {
        FrameConfig c = base;
        c.detector.kind = Method::SNIPS;
        c.detector.domain = Domain::Slice;
        c.data_slots = 1;
        c.snr_db = cfg.snr_db;
        c.rho_db = cfg.rho_db;
        return c;
    }

    TrainingSet make_training_set(const FrameConfig &cfg, int channels, std::uint64_t seed)
    {
        const FramePipeline pipeline(cfg);
        TrainingSet set;
        for (int i = 0; i < channels; ++i)
        {
            Rng rng(derive_seed(seed, (std::uint64_t)i));
            auto ch = draw_channel(rng, cfg.scenario);
            const auto lv = pipeline.levels(ch);
            set.draws.push_back(pipeline.draw(ch, lv, rng));
            set.levels.push_back(lv);
            set.channels.push_back(std::move(ch));
        }
        return set;
    }

    double training_ber(const FramePipeline &pipeline, const std::vector<double> &phis, const TrainingSet &set)
    {
        const FramePipeline rotated = pipeline.with_rotations(phis);
        std::int64_t errors = 0;
        std::int64_t bits = 0;
        for (std::size_t i = 0; i < set.channels.size(); ++i)
        {
            const auto res = rotated.process(set.channels[i], set.levels[i], set.draws[i]);
            errors += res.bit_errors;
            bits += res.bits;
        }
        return bits > 0 ? (double)errors / (double)bits : 0.0;
    }

    std::vector<double> rotation_grid(int B, int C, int points)
    {
        if (points < 1 || C < 1 || B < C)
            throw std::invalid_argument("rotation_grid: invalid arguments");
        const double span = 2.0 * pi / B * C;
        std::vector<double> grid(points);
        for (int k = 0; k < points; ++k)
            grid[k] = span * k / points;
        return grid;
    }

    CoordinateDescentResult coordinate_descent(std::vector<double> initial, const std::vector<double> &grid,
                                               int sweeps, const RotationObjective &objective)
    {
        if (grid.empty())
            throw std::invalid_argument("coordinate_descent: empty grid");
        CoordinateDescentResult res;
        res.phis = std::move(initial);
        double best = objective(res.phis);
        res.trace.push_back(best);

        for (int sweep = 0; sweep < sweeps; ++sweep)
        {
            bool changed = false;
            for (std::size_t c = 0; c < res.phis.size(); ++c)
            {
                const double incumbent = res.phis[c];
                std::vector<double> candidates = grid;
                candidates.push_back(incumbent);
                std::sort(candidates.begin(), candidates.end());
                candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

                double arg = incumbent;
                double val = best;
                bool have = false;
                std::vector<double> trial = res.phis;
                for (double cand : candidates)
                {
                    double v;
                    if (cand == incumbent)
                        v = best;
                    else
                    {
                        trial[c] = cand;
                        v = objective(trial);
                    }
                    // candidates ascend, so strict < keeps the smallest angle among ties
                    if (!have || v < val)
                    {
                        val = v;
                        arg = cand;
                        have = true;
                    }
                }
                if (arg != incumbent)
                    changed = true;
                res.phis[c] = arg;
                best = val;
                res.trace.push_back(best);
            }
            spdlog::info("rotation learning: sweep {} objective {:.6f}", sweep + 1, best);
            if (!changed)
                break;
        }
        return res;
    }

    std::string learning_config_hash(const RotationLearnConfig &cfg, const FrameConfig &base)
    {
        const FrameConfig fc = learning_frame_config(base, cfg);
        return fnv1a_hex(canonical_config(fc, cfg.train_channels) + ";grid_points=" + std::to_string(cfg.grid_points) +
                         ";sweeps=" + std::to_string(cfg.sweeps));
    }

    CoordinateDescentResult learn_rotations(const RotationLearnConfig &cfg, const FrameConfig &base,
                                            const TrainingSet &set)
    {
        cfg.validate();
        const FrameConfig fc = learning_frame_config(base, cfg);
        const FramePipeline pipeline(fc);
        const int B = fc.scenario.B;
        const int C = B / fc.slicer.S;
        const auto grid = rotation_grid(B, C, cfg.grid_points);
        auto objective = [&](const std::vector<double> &phis) { return training_ber(pipeline, phis, set); };
        return coordinate_descent(default_rotations(B, C), grid, cfg.sweeps, objective);
    }
}
