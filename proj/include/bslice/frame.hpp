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

#ifndef BSLICE_FRAME_HPP
#define BSLICE_FRAME_HPP

#include "bslice/beamslice.hpp"
#include "bslice/chanmodel.hpp"
#include "bslice/detector.hpp"
#include "bslice/quantizer.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace bslice
{
    enum class RotationMode
    {
        Uniform, // phi_c = 2 pi c / B
        None,    // phi = 0
        Custom   // explicit angle list
    };

    std::string to_string(RotationMode mode);
    RotationMode parse_rotation_mode(const std::string &name);

    struct SlicerParams
    {
        TransformKind transform = TransformKind::DFT;
        int S = 8;
        RotationMode rotations = RotationMode::Uniform;
        std::vector<double> custom_phis; // radians, used with RotationMode::Custom

        std::vector<double> angles(int B) const;
    };

    /// Everything that determines one simulated operating point. A trial seed plus
    /// this config fully determines a trial.
    struct FrameConfig
    {
        ScenarioConfig scenario;
        DetectorMethod detector;
        SlicerParams slicer;
        std::string constellation = "16qam";
        int jammer_slots = 32;  // N, UE-silent jammer training slots
        int data_slots = 10;    // n, data slots per channel realization
        double snr_db = 20.0;
        double rho_db = 25.0;   // -inf disables the jammer
        double trace_threshold_factor = 1e-12; // "no jammer detected" below factor * B
        double gain_cap = default_gain_cap;

        void validate() const;
    };

    /// Random quantities of one frame, drawn in the antenna domain so that the same
    /// draws can be pushed through different slicers and detectors.
    struct FrameDraws
    {
        CMatrix Y_J;          // B x N: hJ s_J^T + noise (UEs silent)
        CMatrix Y_P;          // B x U: H S_P + hJ w^T + noise
        CMatrix Y_D;          // B x n: H S_D + hJ s_J^T + noise
        CMatrix S_D;          // U x n transmitted data symbols
        std::vector<int> tx;  // symbol indices of S_D, column-major
    };

    struct FrameResult
    {
        CMatrix tx_symbols;   // U x n
        CMatrix soft_symbols; // U x n, equalizer output s*
        std::vector<int> tx_index;
        std::vector<int> rx_index;
        std::int64_t bit_errors = 0;
        std::int64_t bits = 0;
        std::vector<double> rmsse; // per UE
        bool regularized = false;
    };

    /// Precomputed per-operating-point state (slicer, quantizer constants, pilots,
    /// constellation). Immutable and shareable between worker threads.
    class FramePipeline
    {
    public:
        explicit FramePipeline(FrameConfig cfg);

        const FrameConfig &config() const { return cfg_; }
        const QuantizerSpec &quantizer() const { return spec_; }
        const Constellation &constellation() const { return cons_; }
        const CMatrix &pilots() const { return S_P_; }
        // Empty in the antenna domain.
        const std::optional<BeamSlicer> &slicer() const { return slicer_; }

        // Same configuration with different cluster rotations.
        FramePipeline with_rotations(const std::vector<double> &phis) const;

        NoiseJammerLevels levels(const ChannelRealization &ch) const;
        FrameDraws draw(const ChannelRealization &ch, const NoiseJammerLevels &lv, Rng &rng) const;

        /// Jammer phase -> pilot phase -> data phase on fixed draws:
        ///  1. C_hat from the gain-controlled, quantized jammer-phase receive matrix (G_J)
        ///  2. G_P learned from the pilot receive matrix, LS channel estimate
        ///     (CHOPS projects the quantized pilots with P_hat first)
        ///  3. data quantized with the frozen G_P, equalized and sliced
        FrameResult process(const ChannelRealization &ch, const NoiseJammerLevels &lv, const FrameDraws &d) const;

        FrameResult simulate(const ChannelRealization &ch, Rng &rng) const;

        // Draws placement and channel from the trial seed, then simulates one frame.
        FrameResult run_trial(std::uint64_t trial_seed) const;

    private:
        FrameConfig cfg_;
        std::optional<BeamSlicer> slicer_;
        QuantizerSpec spec_;
        Constellation cons_;
        CMatrix S_P_;
    };

    FrameResult simulate_frame(const FrameConfig &cfg, const ChannelRealization &ch, Rng &rng);
}

#endif
