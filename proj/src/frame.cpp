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

#include "bslice/frame.hpp"

#include "bslice/estimator.hpp"
#include "bslice/metrics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace bslice
{
    std::string to_string(RotationMode mode)
    {
        switch (mode)
        {
        case RotationMode::Uniform:
            return "uniform";
        case RotationMode::None:
            return "none";
        case RotationMode::Custom:
            return "custom";
        }
        return "unknown";
    }

    RotationMode parse_rotation_mode(const std::string &name)
    {
        if (name == "uniform")
            return RotationMode::Uniform;
        if (name == "none")
            return RotationMode::None;
        if (name == "custom")
            return RotationMode::Custom;
        throw std::invalid_argument("unknown rotation mode '" + name + "' (expected uniform|none|custom)");
    }

    std::vector<double> SlicerParams::angles(int B) const
    {
        if (S < 1 || B % S != 0)
            throw std::invalid_argument("cluster size S must divide B");
        const int C = B / S;
        switch (rotations)
        {
        case RotationMode::Uniform:
            return default_rotations(B, C);
        case RotationMode::None:
            return std::vector<double>(C, 0.0);
        case RotationMode::Custom:
            if ((int)custom_phis.size() != C)
                throw std::invalid_argument("custom rotations: expected " + std::to_string(C) + " angles, got " +
                                            std::to_string(custom_phis.size()));
            return custom_phis;
        }
        return {};
    }

    void FrameConfig::validate() const
    {
        scenario.validate();
        if (jammer_slots < 1)
            throw std::invalid_argument("jammer_slots must be at least 1");
        if (data_slots < 1)
            throw std::invalid_argument("data_slots must be at least 1");
        if (!std::isfinite(snr_db))
            throw std::invalid_argument("snr_db must be finite");
        if (std::isnan(rho_db) || rho_db == std::numeric_limits<double>::infinity())
            throw std::invalid_argument("rho_db must be finite or -inf");
        if (!(trace_threshold_factor >= 0.0))
            throw std::invalid_argument("trace_threshold_factor must be non-negative");
        if (!(gain_cap > 0.0))
            throw std::invalid_argument("gain_cap must be positive");
        if (detector.domain == Domain::Slice)
        {
            (void)slicer.angles(scenario.B);
            (void)build_base_transform(slicer.transform, slicer.S);
        }
        (void)Constellation::from_name(constellation, scenario.Es);
    }

    FramePipeline::FramePipeline(FrameConfig cfg) : cfg_(std::move(cfg))
    {
        cfg_.validate();
        if (cfg_.detector.domain == Domain::Slice)
            slicer_.emplace(cfg_.slicer.transform, cfg_.slicer.S, cfg_.scenario.B, cfg_.slicer.angles(cfg_.scenario.B));
        spec_ = cfg_.detector.adc ? QuantizerSpec::with_bits(*cfg_.detector.adc) : QuantizerSpec::infinite();
        cons_ = Constellation::from_name(cfg_.constellation, cfg_.scenario.Es);
        S_P_ = pilot_matrix(cfg_.scenario.U, cfg_.scenario.Es);
    }

    FramePipeline FramePipeline::with_rotations(const std::vector<double> &phis) const
    {
        FrameConfig c = cfg_;
        c.slicer.rotations = RotationMode::Custom;
        c.slicer.custom_phis = phis;
        return FramePipeline(std::move(c));
    }

    NoiseJammerLevels FramePipeline::levels(const ChannelRealization &ch) const
    {
        return solve_levels(ch.H, ch.hJ, db_to_linear(cfg_.snr_db), db_to_linear(cfg_.rho_db), cfg_.scenario.Es);
    }

    FrameDraws FramePipeline::draw(const ChannelRealization &ch, const NoiseJammerLevels &lv, Rng &rng) const
    {
        const int B = cfg_.scenario.B;
        const int U = cfg_.scenario.U;
        const int N = cfg_.jammer_slots;
        const int n = cfg_.data_slots;
        if (ch.H.rows() != B || ch.H.cols() != U || ch.hJ.size() != B)
            throw std::invalid_argument("FramePipeline::draw: channel dimensions do not match the configuration");

        auto jammer_row = [&](int len)
        {
            Eigen::RowVectorXcd s(len);
            for (int k = 0; k < len; ++k)
                s[k] = complex_normal(rng, lv.Ej);
            return s;
        };

        FrameDraws d;
        // jammer phase: UEs silent
        {
            const auto sJ = jammer_row(N);
            d.Y_J = ch.hJ * sJ + complex_normal_matrix(rng, B, N, lv.N0);
        }
        // pilot phase: jammer keeps transmitting
        {
            const auto w = jammer_row(U);
            d.Y_P = ch.H * S_P_ + ch.hJ * w + complex_normal_matrix(rng, B, U, lv.N0);
        }
        // data phase
        {
            std::uniform_int_distribution<int> pick(0, (int)cons_.points.size() - 1);
            d.S_D.resize(U, n);
            d.tx.resize((std::size_t)U * n);
            for (int k = 0; k < n; ++k)
                for (int u = 0; u < U; ++u)
                {
                    const int idx = pick(rng);
                    d.tx[(std::size_t)k * U + u] = idx;
                    d.S_D(u, k) = cons_.points[idx];
                }
            const auto sJ = jammer_row(n);
            d.Y_D = ch.H * d.S_D + ch.hJ * sJ + complex_normal_matrix(rng, B, n, lv.N0);
        }
        return d;
    }

    FrameResult FramePipeline::process(const ChannelRealization &ch, const NoiseJammerLevels &lv,
                                       const FrameDraws &d) const
    {
        const Method method = cfg_.detector.kind;
        const double Es = cfg_.scenario.Es;
        const int U = cfg_.scenario.U;
        auto to_slice = [&](const CMatrix &Y) { return slicer_ ? slicer_->apply(Y) : Y; };

        // jammer phase
        CMatrix C_hat;
        if (method == Method::SNIPS || method == Method::CHOPS)
        {
            const CMatrix Yj = to_slice(d.Y_J);
            const GainMatrix G_J = learn_gains(Yj, cfg_.gain_cap);
            C_hat = estimate_jammer_covariance(compquant(Yj, G_J, spec_));
        }

        // pilot phase; G_P stays fixed for the data phase
        const CMatrix Yp = to_slice(d.Y_P);
        const GainMatrix G_P = learn_gains(Yp, cfg_.gain_cap);
        CMatrix R_P = compquant(Yp, G_P, spec_);

        std::optional<CMatrix> projector;
        if (method == Method::CHOPS)
        {
            auto P = estimate_projection(C_hat, cfg_.trace_threshold_factor * (double)cfg_.scenario.B);
            if (P.jammer_detected)
            {
                R_P = P.P_hat * R_P;
                projector = std::move(P.P_hat);
            }
        }
        const CMatrix H_hat = ls_channel_estimate(R_P, S_P_, Es);

        EqualizerMatrix W;
        switch (method)
        {
        case Method::SNIPS:
            W = snips_matrix(H_hat, C_hat, spec_, G_P, lv.N0, Es);
            break;
        case Method::LMMSE:
            W = snips_matrix(H_hat, CMatrix(), spec_, G_P, lv.N0, Es);
            W.method = Method::LMMSE;
            break;
        case Method::CHOPS:
            W = chops_matrix(H_hat, spec_, G_P, lv.N0, Es);
            break;
        case Method::GeniePOS:
        case Method::GenieIAN:
        {
            GenieInputs genie{slicer_ ? slicer_->apply(ch.hJ) : ch.hJ, lv.Ej};
            auto g = genie_baselines(method, H_hat, genie, spec_, G_P, lv.N0, Es);
            W = std::move(g.W);
            if (method == Method::GeniePOS)
                projector = std::move(g.P);
            break;
        }
        }

        // data phase
        CMatrix R_D = compquant(to_slice(d.Y_D), G_P, spec_);
        if (projector)
            R_D = (*projector) * R_D;

        FrameResult res;
        res.tx_symbols = d.S_D;
        res.soft_symbols = detect(W, R_D);
        res.tx_index = d.tx;
        res.rx_index.resize(d.tx.size());
        res.regularized = W.regularized;
        for (Eigen::Index k = 0; k < res.soft_symbols.cols(); ++k)
        {
            const auto decided = slice_symbols(res.soft_symbols.col(k), cons_);
            for (int u = 0; u < U; ++u)
            {
                const std::size_t i = (std::size_t)k * U + u;
                res.rx_index[i] = decided[u];
                res.bit_errors += bit_errors(d.tx[i], decided[u], cons_);
            }
        }
        res.bits = (std::int64_t)d.tx.size() * cons_.bits_per_symbol;
        res.rmsse = compute_rmsse(res.tx_symbols, res.soft_symbols);
        return res;
    }

    FrameResult FramePipeline::simulate(const ChannelRealization &ch, Rng &rng) const
    {
        const auto lv = levels(ch);
        const auto d = draw(ch, lv, rng);
        return process(ch, lv, d);
    }

    FrameResult FramePipeline::run_trial(std::uint64_t trial_seed) const
    {
        Rng rng(trial_seed);
        const auto ch = draw_channel(rng, cfg_.scenario);
        return simulate(ch, rng);
    }

    FrameResult simulate_frame(const FrameConfig &cfg, const ChannelRealization &ch, Rng &rng)
    {
        return FramePipeline(cfg).simulate(ch, rng);
    }
}
