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

#include <catch_amalgamated.hpp>

#include <cmath>

using namespace bslice;

namespace
{
    SweepSpec small_spec()
    {
        SweepSpec spec;
        spec.base.scenario.B = 32;
        spec.base.scenario.U = 4;
        spec.base.data_slots = 4;
        spec.grid.channel = {ChannelKind::LoS};
        spec.grid.method = {Method::SNIPS};
        spec.grid.domain = {Domain::Slice};
        spec.grid.transform = {TransformKind::DFT};
        spec.grid.rotations = {RotationMode::Uniform};
        spec.grid.S = {8};
        spec.grid.q = {4};
        spec.grid.rho_db = {25.0};
        spec.grid.snr_db = {10.0};
        spec.trials = 6;
        spec.base_seed = 17;
        return spec;
    }
}

TEST_CASE("grid expansion", "[sweep]")
{
    auto spec = small_spec();
    spec.grid.method = {Method::SNIPS, Method::CHOPS};
    spec.grid.S = {1, 4};
    spec.grid.snr_db = {0.0, 5.0, 10.0};
    const auto pts = expand_grid(spec);
    REQUIRE(pts.size() == 12);
    REQUIRE(spec.grid.size() == 12);
    // SNR varies fastest, method slowest of the varied axes
    REQUIRE(pts[0].cfg.snr_db == 0.0);
    REQUIRE(pts[1].cfg.snr_db == 5.0);
    REQUIRE(pts[3].cfg.slicer.S == 4);
    REQUIRE(pts[6].cfg.detector.kind == Method::CHOPS);
    for (std::size_t i = 0; i < pts.size(); ++i)
        REQUIRE(pts[i].index == i);

    // the point seed only depends on channel / rho / snr
    REQUIRE(pts[0].seed == pts[3].seed);
    REQUIRE(pts[0].seed == pts[6].seed);
    REQUIRE(pts[0].seed != pts[1].seed);
    REQUIRE(pts[1].seed != pts[2].seed);

    spec.grid.snr_db.clear();
    REQUIRE_THROWS_AS(expand_grid(spec), std::invalid_argument);
}

TEST_CASE("config hash", "[sweep]")
{
    const auto cfg = small_spec().base;
    REQUIRE(config_hash(cfg, 10) == config_hash(cfg, 10));
    REQUIRE(config_hash(cfg, 10).size() == 16);
    REQUIRE(config_hash(cfg, 10) != config_hash(cfg, 11));
    auto other = cfg;
    other.snr_db += 1e-9;
    REQUIRE(config_hash(cfg, 10) != config_hash(other, 10));
    REQUIRE(fnv1a_hex("") == "cbf29ce484222325");
    REQUIRE(fnv1a_hex("a") == "af63dc4c8601ec8c");
}

TEST_CASE("run_point", "[sweep]")
{
    const auto spec = small_spec();
    const auto pt = expand_grid(spec).front();

    SECTION("single trial gives a single record")
    {
        const auto rec = run_point(pt.cfg, 1, pt.seed);
        REQUIRE(rec.trial_count() == 1);
        REQUIRE_FALSE(rec.failure);
        REQUIRE(rec.seed == pt.seed);
        REQUIRE(rec.config_hash == config_hash(pt.cfg, 1));
    }
    SECTION("identical across repeated runs and worker counts")
    {
        const auto a = run_point(pt.cfg, spec.trials, pt.seed, 1);
        const auto b = run_point(pt.cfg, spec.trials, pt.seed, 1);
        const auto c = run_point(pt.cfg, spec.trials, pt.seed, 8);
        REQUIRE(a.trials == b.trials);
        REQUIRE(a.trials == c.trials);
    }
    SECTION("trial t uses derive_seed(point seed, t)")
    {
        const auto rec = run_point(pt.cfg, 3, pt.seed);
        const FramePipeline pipe(pt.cfg);
        const auto r = pipe.run_trial(derive_seed(pt.seed, 2));
        REQUIRE(rec.trials.at(2).bit_errors == r.bit_errors);
        REQUIRE(rec.trials.at(2).rmsse == r.rmsse);
    }
    SECTION("invalid configuration marks the record as failed")
    {
        auto bad = pt.cfg;
        bad.slicer.S = 5;
        const auto rec = run_point(bad, 2, 1);
        REQUIRE(rec.failure);
        REQUIRE(rec.trial_count() == 0);
    }
    REQUIRE_THROWS_AS(run_point(pt.cfg, 0, 1), std::invalid_argument);
}

TEST_CASE("run_sweep returns one row per point", "[sweep]")
{
    auto spec = small_spec();
    spec.grid.snr_db = {5.0, 15.0};
    spec.trials = 2;
    const auto rows = run_sweep(spec);
    REQUIRE(rows.size() == 2);
    REQUIRE(rows[1].point.cfg.snr_db == 15.0);
    REQUIRE(rows[1].record.trial_count() == 2);
}

TEST_CASE("higher ADC resolution never serves fewer UEs", "[sweep]")
{
    SweepSpec spec;
    spec.base.scenario.B = 64;
    spec.base.scenario.U = 8;
    spec.grid = small_spec().grid;
    spec.grid.q = {3, 4, 6, 8, std::nullopt};
    spec.grid.snr_db = {20.0};
    spec.trials = 100;
    const auto rows = run_sweep(spec);
    for (std::size_t i = 1; i < rows.size(); ++i)
    {
        const auto &lo = rows[i - 1].record;
        const auto &hi = rows[i].record;
        const auto n = (std::int64_t)hi.rmsse_samples().size();
        const auto served_hi = (std::int64_t)std::llround(hi.served_frac() * (double)n);
        INFO("q index " << i << ": served " << lo.served_frac() << " -> " << hi.served_frac());
        REQUIRE(wilson_interval(served_hi, n).hi >= lo.served_frac());
    }
}
