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

#ifndef BSLICE_CONFIG_HPP
#define BSLICE_CONFIG_HPP

#include "bslice/rotation_learning.hpp"
#include "bslice/sweep.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace bslice
{
    // Configuration problem, message prefixed with "<file>:<line>:" or "--set <arg>:".
    class ConfigError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    /// Union of scenario, frame, sweep grid, rotation-learning and output settings.
    struct RunConfig
    {
        SweepSpec sweep;
        RotationLearnConfig learn;
        int eval_channels = 0; // learn-rotations: size of an independent evaluation set (0 = skip)
        std::string out;

        // Every grid axis holds exactly one value; throws ConfigError otherwise.
        FrameConfig single_point() const;
    };

    /// Reads a flat YAML mapping. Scalars or lists are accepted for the grid axes
    /// (channel, method, domain, transform, rotations, S, q, rho_db, snr_db). Unknown
    /// keys are rejected. `overrides` are "key=value" strings applied after the file,
    /// with the value parsed as YAML (e.g. "S=[1,8]").
    RunConfig load_run_config(const std::string &path, const std::vector<std::string> &overrides = {});
    RunConfig parse_run_config(const std::string &text, const std::string &source,
                               const std::vector<std::string> &overrides = {});

    // Keys accepted in config files, sorted.
    const std::vector<std::string> &known_config_keys();
}

#endif
