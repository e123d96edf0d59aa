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

#include <catch_amalgamated.hpp>

#include <cmath>

using namespace bslice;
using Catch::Matchers::WithinAbs;

namespace
{
    FrameConfig tiny_config()
    {
        FrameConfig cfg;
        cfg.scenario.B = 16;
        cfg.scenario.U = 2;
        cfg.slicer.S = 4;
        return cfg;
    }

    bool non_increasing(const std::vector<double> &v)
    {
        for (std::size_t i = 1; i < v.size(); ++i)
            if (v[i] > v[i - 1])
                return false;
        return true;
    }
}

TEST_CASE("rotation grid", "[rotation]")
{
    const auto g = rotation_grid(16, 4, 8);
    REQUIRE(g.size() == 8);
    REQUIRE(g[0] == 0.0);
    REQUIRE_THAT(g[1], WithinAbs(pi / 16, 1e-15));
    REQUIRE(g.back() < 2 * pi / 16 * 4);
    REQUIRE(rotation_grid(256, 32, 148).size() == 148);
    REQUIRE_THROWS_AS(rotation_grid(16, 32, 8), std::invalid_argument);
}

TEST_CASE("coordinate descent", "[rotation]")
{
    const int B = 16, C = 4;
    const auto target = default_rotations(B, C);

    SECTION("recovers the minimizer of a separable stub objective")
    {
        const auto grid = rotation_grid(B, C, 16); // contains every uniform stride
        auto stub = [&](const std::vector<double> &phis)
        {
            double s = 0.0;
            for (int c = 0; c < C; ++c)
                s += (phis[c] - target[c]) * (phis[c] - target[c]);
            return s;
        };
        const auto res = coordinate_descent(std::vector<double>(C, 0.3), grid, 5, stub);
        for (int c = 0; c < C; ++c)
            REQUIRE_THAT(res.phis[c], WithinAbs(target[c], 1e-12));
        REQUIRE(non_increasing(res.trace));
        // one sweep finds the optimum, the second confirms it and stops
        REQUIRE(res.trace.size() == 1 + 2 * C);
    }
    SECTION("ties are resolved to the smallest angle")
    {
        const auto grid = rotation_grid(B, C, 8);
        const auto res = coordinate_descent(target, grid, 10, [](const std::vector<double> &) { return 1.0; });
        for (double phi : res.phis)
            REQUIRE(phi == 0.0);
    }
    SECTION("trace never increases for a rugged objective")
    {
        const auto grid = rotation_grid(B, C, 12);
        auto rugged = [](const std::vector<double> &phis)
        {
            double s = 0.0;
            for (std::size_t c = 0; c < phis.size(); ++c)
                s += std::sin(7.3 * phis[c] + (double)c) * std::cos(3.1 * phis[(c + 1) % phis.size()]);
            return s;
        };
        const auto res = coordinate_descent(target, grid, 6, rugged);
        REQUIRE(non_increasing(res.trace));
        REQUIRE_THAT(res.trace.back(), WithinAbs(rugged(res.phis), 1e-15));
    }
    REQUIRE_THROWS_AS(coordinate_descent(target, {}, 1, [](const std::vector<double> &) { return 0.0; }),
                      std::invalid_argument);
}

TEST_CASE("training set and objective", "[rotation]")
{
    RotationLearnConfig lc;
    lc.grid_points = 6;
    lc.sweeps = 2;
    lc.train_channels = 5;
    const auto fc = learning_frame_config(tiny_config(), lc);
    REQUIRE(fc.data_slots == 1);
    REQUIRE(fc.detector.kind == Method::SNIPS);
    REQUIRE(fc.snr_db == lc.snr_db);

    const auto set = make_training_set(fc, lc.train_channels, 3);
    REQUIRE(set.channels.size() == 5);
    REQUIRE(set.draws.front().S_D.cols() == 1);

    // objective equals the pooled BER of processing each fixed draw
    const FramePipeline pipe(fc);
    const auto phis = default_rotations(16, 4);
    std::int64_t errors = 0, bits = 0;
    for (std::size_t i = 0; i < set.channels.size(); ++i)
    {
        const auto r = pipe.process(set.channels[i], set.levels[i], set.draws[i]);
        errors += r.bit_errors;
        bits += r.bits;
    }
    REQUIRE(training_ber(pipe, phis, set) == (double)errors / (double)bits);
    REQUIRE(training_ber(pipe, phis, set) == training_ber(pipe, phis, set));

    const auto res = learn_rotations(lc, tiny_config(), set);
    REQUIRE(res.phis.size() == 4);
    REQUIRE(non_increasing(res.trace));
    REQUIRE(res.trace.front() == training_ber(pipe, phis, set));
    REQUIRE(res.trace.back() == training_ber(pipe, res.phis, set));
    REQUIRE(learning_config_hash(lc, tiny_config()).size() == 16);

    lc.grid_points = 1;
    REQUIRE_THROWS_AS(lc.validate(), std::invalid_argument);
}
