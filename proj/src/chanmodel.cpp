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

#include "bslice/chanmodel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bslice
{
    std::string to_string(ChannelKind kind)
    {
        return kind == ChannelKind::LoS ? "los" : "nlos";
    }

    ChannelKind parse_channel_kind(const std::string &name)
    {
        if (name == "los")
            return ChannelKind::LoS;
        if (name == "nlos")
            return ChannelKind::NLoS;
        throw std::invalid_argument("unknown channel kind '" + name + "' (expected los|nlos)");
    }

    void ScenarioConfig::validate() const
    {
        if (B < 1)
            throw std::invalid_argument("B must be positive");
        if (U < 1)
            throw std::invalid_argument("U must be positive");
        if (U >= B)
            throw std::invalid_argument("U must be smaller than B");
        if (!(sector_halfwidth > 0.0 && sector_halfwidth <= 90.0))
            throw std::invalid_argument("sector_halfwidth must lie in (0, 90] degrees");
        if (!(dist_min > 0.0 && dist_min < dist_max))
            throw std::invalid_argument("require 0 < dist_min < dist_max");
        if (!(min_sep > 0.0))
            throw std::invalid_argument("min_sep must be positive");
        if ((U + 1) * min_sep >= 2.0 * sector_halfwidth)
            throw std::invalid_argument("placement infeasible: (U+1)*min_sep must be below the sector width");
        if (!(power_control_db >= 0.0))
            throw std::invalid_argument("power_control_db must be non-negative");
        if (nlos_paths < 1)
            throw std::invalid_argument("nlos_paths must be at least 1");
        if (!(nlos_angle_spread >= 0.0))
            throw std::invalid_argument("nlos_angle_spread must be non-negative");
        if (!(Es > 0.0))
            throw std::invalid_argument("Es must be positive");
    }

    CVector steering_vector(double theta_deg, int B)
    {
        if (B < 1)
            throw std::invalid_argument("steering_vector: B must be positive");
        if (!(std::abs(theta_deg) <= 90.0))
            throw std::domain_error("steering_vector: angle outside [-90, 90] degrees");

        const double s = std::sin(theta_deg * pi / 180.0);
        CVector a(B);
        for (int b = 0; b < B; ++b)
            a[b] = std::polar(1.0, -pi * b * s);
        return a;
    }

    Placement draw_placement(Rng &rng, const ScenarioConfig &cfg)
    {
        cfg.validate();

        std::uniform_real_distribution<double> angle_dist(-cfg.sector_halfwidth, cfg.sector_halfwidth);
        std::uniform_real_distribution<double> range_dist(cfg.dist_min, cfg.dist_max);

        // Sequential rejection: each terminal's angle is redrawn until it clears all
        // previously accepted terminals. The jammer is placed last.
        std::vector<double> angles;
        angles.reserve(cfg.U + 1);
        int rejected = 0;
        while ((int)angles.size() < cfg.U + 1)
        {
            const double cand = angle_dist(rng);
            const bool clear = std::all_of(angles.begin(), angles.end(),
                                           [&](double a) { return std::abs(a - cand) >= cfg.min_sep; });
            if (clear)
                angles.push_back(cand);
            else if (++rejected > placement_retry_budget)
                throw std::runtime_error("draw_placement: retry budget exhausted (configuration too dense)");
        }

        Placement p;
        p.ue_angles.assign(angles.begin(), angles.begin() + cfg.U);
        p.jam_angle = angles.back();
        p.ue_dists.resize(cfg.U);
        for (auto &d : p.ue_dists)
            d = range_dist(rng);
        p.jam_dist = range_dist(rng);
        return p;
    }

    double pathloss_gain(double dist, const ScenarioConfig &cfg)
    {
        return std::pow(dist, -cfg.pathloss_exponent);
    }

    ChannelRealization gen_los_channel(const Placement &p, const ScenarioConfig &cfg)
    {
        if ((int)p.ue_angles.size() != cfg.U || (int)p.ue_dists.size() != cfg.U)
            throw std::invalid_argument("gen_los_channel: placement does not match U");

        ChannelRealization ch;
        ch.H.resize(cfg.B, cfg.U);
        for (int u = 0; u < cfg.U; ++u)
            ch.H.col(u) = std::sqrt(pathloss_gain(p.ue_dists[u], cfg)) * steering_vector(p.ue_angles[u], cfg.B);
        ch.H = apply_power_control(ch.H, cfg.power_control_db);
        ch.hJ = std::sqrt(pathloss_gain(p.jam_dist, cfg)) * steering_vector(p.jam_angle, cfg.B);
        ch.placement = p;
        return ch;
    }

    namespace
    {
        // Sum of L paths with CN(0, 1/L) gains around the nominal angle; E||h||^2 = B.
        CVector cluster_response(double nominal_deg, const ScenarioConfig &cfg, Rng &rng)
        {
            std::normal_distribution<double> spread(0.0, 1.0);
            CVector h = CVector::Zero(cfg.B);
            for (int l = 0; l < cfg.nlos_paths; ++l)
            {
                const cplx gain = complex_normal(rng, 1.0 / cfg.nlos_paths);
                const double angle = std::clamp(nominal_deg + cfg.nlos_angle_spread * spread(rng), -90.0, 90.0);
                h += gain * steering_vector(angle, cfg.B);
            }
            return h;
        }
    }

    ChannelRealization gen_nlos_channel(const Placement &p, const ScenarioConfig &cfg, Rng &rng)
    {
        if ((int)p.ue_angles.size() != cfg.U || (int)p.ue_dists.size() != cfg.U)
            throw std::invalid_argument("gen_nlos_channel: placement does not match U");

        ChannelRealization ch;
        ch.H.resize(cfg.B, cfg.U);
        for (int u = 0; u < cfg.U; ++u)
            ch.H.col(u) = std::sqrt(pathloss_gain(p.ue_dists[u], cfg)) * cluster_response(p.ue_angles[u], cfg, rng);
        ch.H = apply_power_control(ch.H, cfg.power_control_db);
        ch.hJ = std::sqrt(pathloss_gain(p.jam_dist, cfg)) * cluster_response(p.jam_angle, cfg, rng);
        ch.placement = p;
        return ch;
    }

    ChannelRealization draw_channel(Rng &rng, const ScenarioConfig &cfg)
    {
        const Placement p = draw_placement(rng, cfg);
        if (cfg.channel == ChannelKind::LoS)
            return gen_los_channel(p, cfg);
        return gen_nlos_channel(p, cfg, rng);
    }

    CMatrix apply_power_control(const CMatrix &H, double power_control_db)
    {
        const Eigen::Index U = H.cols();
        if (U == 0)
            throw std::invalid_argument("apply_power_control: empty channel matrix");

        RVector power = H.colwise().squaredNorm().transpose();
        if ((power.array() <= 0.0).any())
            throw std::invalid_argument("apply_power_control: all-zero channel column");

        const double half_range = db_to_linear(power_control_db);
        const double max_ratio = half_range * half_range;
        if (power.maxCoeff() / power.minCoeff() <= max_ratio)
            return H;

        const double geo_mean = std::exp(power.array().log().mean());
        CMatrix out = H;
        for (Eigen::Index u = 0; u < U; ++u)
        {
            const double target = std::clamp(power[u], geo_mean / half_range, geo_mean * half_range);
            out.col(u) *= std::sqrt(target / power[u]);
        }
        out *= H.norm() / out.norm();
        return out;
    }

    NoiseJammerLevels solve_levels(const CMatrix &H, const CVector &hJ, double snr, double rho, double Es)
    {
        const double h_energy = H.squaredNorm();
        const double j_energy = hJ.squaredNorm();
        if (!(h_energy > 0.0))
            throw std::invalid_argument("solve_levels: zero UE channel");
        if (!(j_energy > 0.0))
            throw std::invalid_argument("solve_levels: zero jammer channel");
        if (!(snr > 0.0))
            throw std::invalid_argument("solve_levels: SNR must be positive");
        if (!(rho >= 0.0))
            throw std::invalid_argument("solve_levels: rho must be non-negative");

        const double B = (double)H.rows();
        const double U = (double)H.cols();
        NoiseJammerLevels lv;
        lv.N0 = Es * h_energy / (B * snr);
        lv.Ej = rho * Es * h_energy / (U * j_energy);
        return lv;
    }

    double measured_snr(const CMatrix &H, double N0, double Es)
    {
        return Es * H.squaredNorm() / ((double)H.rows() * N0);
    }

    double measured_rho(const CMatrix &H, const CVector &hJ, double Ej, double Es)
    {
        return (double)H.cols() * Ej * hJ.squaredNorm() / (Es * H.squaredNorm());
    }
}
