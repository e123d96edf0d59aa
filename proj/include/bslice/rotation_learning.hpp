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

#ifndef BSLICE_ROTATION_LEARNING_HPP
#define BSLICE_ROTATION_LEARNING_HPP

#include "bslice/frame.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace bslice
{
    struct RotationLearnConfig
    {
        int grid_points = 148;
        int sweeps = 50;
        int train_channels = 1000;
        double snr_db = 20.0;
        double rho_db = 25.0;

        void validate() const;
    };

    /// Fixed training channels with pre-drawn noise, jammer and data (one data slot),
    /// so the BER objective is a deterministic function of the rotation angles.
    struct TrainingSet
    {
        std::vector<ChannelRealization> channels;
        std::vector<NoiseJammerLevels> levels;
        std::vector<FrameDraws> draws;
    };

    // `base` with data_slots = 1 and the learning SNR / rho; used for training and evaluation.
    FrameConfig learning_frame_config(const FrameConfig &base, const RotationLearnConfig &cfg);

    TrainingSet make_training_set(const FrameConfig &cfg, int channels, std::uint64_t seed);

    // Uncoded BER over a training set for the given rotations.
    double training_ber(const FramePipeline &pipeline, const std::vector<double> &phis, const TrainingSet &set);

    /// `points` equally spaced angles in [0, 2 pi / S), i.e. [0, (2 pi / B) C).
    /// Rotating a DFT cluster by 2 pi / S only permutes its beams, so the grid covers one period.
    std::vector<double> rotation_grid(int B, int C, int points);

    struct CoordinateDescentResult
    {
        std::vector<double> phis;
        // trace[0] is the objective at the initial angles, then one entry per coordinate update.
        std::vector<double> trace;
    };

    using RotationObjective = std::function<double(const std::vector<double> &)>;

    /// For c = 0..C-1 in order, evaluates the objective with phi_c set to every grid angle
    /// (and the incumbent), keeps the argmin (ties to the smallest angle), repeated for
    /// `sweeps` full passes. Stops early once a full pass changes nothing.
    CoordinateDescentResult coordinate_descent(std::vector<double> initial, const std::vector<double> &grid,
                                               int sweeps, const RotationObjective &objective);

    // Hash identifying a learning run (frame config, learning parameters, training-set size).
    std::string learning_config_hash(const RotationLearnConfig &cfg, const FrameConfig &base);

    /// Learns per-cluster rotations for SNIPS by coordinate descent on the training-set
    /// BER, starting from the uniformly-strided rotations.
    CoordinateDescentResult learn_rotations(const RotationLearnConfig &cfg, const FrameConfig &base,
                                            const TrainingSet &set);
}

#endif
