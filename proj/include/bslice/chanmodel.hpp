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

#ifndef BSLICE_CHANMODEL_HPP
#define BSLICE_CHANMODEL_HPP

#include "bslice/types.hpp"

#include <string>
#include <vector>

namespace bslice
{
    enum class ChannelKind
    {
        LoS,
        NLoS
    };

    std::string to_string(ChannelKind kind);
    ChannelKind parse_channel_kind(const std::string &name);

    // Geometry, pathloss and power-control parameters of one simulated cell.
    // Angles in degrees, distances in meters.
    struct ScenarioConfig
    {
        int B = 256;                          // BS antennas
        int U = 32;                           // single-antenna UEs
        double sector_halfwidth = 60.0;       // 120 degree sector
        double dist_min = 10.0;
        double dist_max = 100.0;
        double min_sep = 1.0;                 // UE-UE and UE-jammer angular separation
        // +/- range around the mean receive power; "3 dB" taken as an exact factor of 2
        double power_control_db = 3.0102999566398120;
        double pathloss_exponent = 2.0;
        int nlos_paths = 15;
        double nlos_angle_spread = 10.0;      // std. dev. of path angles around the nominal angle
        double Es = 1.0;
        ChannelKind channel = ChannelKind::LoS;

        // Throws std::invalid_argument when the configuration is inconsistent or infeasible.
        void validate() const;
    };

    struct Placement
    {
        std::vector<double> ue_angles;
        std::vector<double> ue_dists;
        double jam_angle = 0.0;
        double jam_dist = 0.0;
    };

    struct ChannelRealization
    {
        CMatrix H;  // B x U
        CVector hJ; // B
        Placement placement;
    };

    struct NoiseJammerLevels
    {
        double N0 = 0.0; // per-entry complex noise variance
        double Ej = 0.0; // jammer symbol variance
    };

    // Maximum number of rejected angle draws in draw_placement before giving up.
    inline constexpr int placement_retry_budget = 10000;

    // Half-wavelength ULA response, entry b = exp(-i pi b sin(theta)), b = 0..B-1.
    CVector steering_vector(double theta_deg, int B);

    Placement draw_placement(Rng &rng, const ScenarioConfig &cfg);

    // Free-space style receive power r^-pathloss_exponent for a terminal at distance r.
    double pathloss_gain(double dist, const ScenarioConfig &cfg);

    ChannelRealization gen_los_channel(const Placement &p, const ScenarioConfig &cfg);
    ChannelRealization gen_nlos_channel(const Placement &p, const ScenarioConfig &cfg, Rng &rng);

    // Draws a placement and the channel type selected by cfg.channel.
    ChannelRealization draw_channel(Rng &rng, const ScenarioConfig &cfg);

    /// Clamps per-UE receive powers to +/- power_control_db around their geometric mean
    /// whenever the max/min power ratio exceeds 10^(2*power_control_db/10), then rescales
    /// all columns by one common factor so the Frobenius norm is unchanged. Column
    /// directions are preserved. Throws std::invalid_argument on an all-zero column.
    CMatrix apply_power_control(const CMatrix &H, double power_control_db = 3.0102999566398120);

    /// Noise and jammer levels that realize the requested average receive SNR and
    /// relative jammer power (both linear):
    ///   N0 = Es ||H||_F^2 / (B snr),   Ej = rho Es ||H||_F^2 / (U ||hJ||^2).
    NoiseJammerLevels solve_levels(const CMatrix &H, const CVector &hJ, double snr, double rho, double Es);

    // Inverse relations, used to verify solve_levels.
    double measured_snr(const CMatrix &H, double N0, double Es);
    double measured_rho(const CMatrix &H, const CVector &hJ, double Ej, double Es);
}

#endif
