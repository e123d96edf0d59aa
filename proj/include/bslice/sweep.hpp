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

#ifndef BSLICE_SWEEP_HPP
#define BSLICE_SWEEP_HPP

#include "bslice/frame.hpp"
#include "bslice/metrics.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace bslice
{
    /// Axes of a parameter sweep. The grid is the cartesian product of all axes, in
    /// the order channel, method, domain, transform, rotations, S, q, rho, snr (SNR
    /// varies fastest). Every axis must be non-empty.
    struct SweepGrid
    {
        std::vector<ChannelKind> channel;
        std::vector<Method> method;
        std::vector<Domain> domain;
        std::vector<TransformKind> transform;
        std::vector<RotationMode> rotations;
        std::vector<int> S;
        std::vector<std::optional<int>> q;
        std::vector<double> rho_db;
        std::vector<double> snr_db;

        std::size_t size() const;
    };

    struct SweepSpec
    {
        std::string scenario = "sweep";
        FrameConfig base; // fields not covered by the grid
        SweepGrid grid;
        int trials = 100;
        std::uint64_t base_seed = 1;
        int workers = 1;
    };

    struct SweepPoint
    {
        std::size_t index = 0;
        FrameConfig cfg;
        // Point seed, shared by all points with the same (channel, rho, snr) grid position;
        // trial t uses derive_seed(seed, t).
        std::uint64_t seed = 0;
    };

    struct SweepRow
    {
        SweepPoint point;
        MetricRecord record;
    };

    // Throws std::invalid_argument if any axis is empty.
    std::vector<SweepPoint> expand_grid(const SweepSpec &spec);

    // 64-bit FNV-1a hash of `text` as 16 lowercase hex digits.
    std::string fnv1a_hex(const std::string &text);

    // Canonical text form of a point configuration and its 64-bit FNV-1a hash (hex).
    std::string canonical_config(const FrameConfig &cfg, int trials);
    std::string config_hash(const FrameConfig &cfg, int trials);

    /// Runs `trials` independent trials of one operating point on `workers` threads.
    /// Trial t is seeded with derive_seed(point_seed, t), so the result does not depend
    /// on the worker count. A throwing trial marks the record as failed.
    MetricRecord run_point(const FrameConfig &cfg, int trials, std::uint64_t point_seed, int workers = 1);

    std::vector<SweepRow> run_sweep(const SweepSpec &spec);
}

#endif
