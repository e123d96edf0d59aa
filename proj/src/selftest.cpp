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

#include "bslice/selftest.hpp"

#include "bslice/estimator.hpp"
#include "bslice/frame.hpp"

#include <cmath>
#include <cstdio>
#include <functional>

namespace bslice
{
    namespace
    {
        std::string fmt(const char *label, double v)
        {
            char buf[96];
            std::snprintf(buf, sizeof buf, "%s = %.3e", label, v);
            return buf;
        }

        SelftestResult check(const std::string &name, const std::function<SelftestResult()> &fn)
        {
            try
            {
                auto r = fn();
                r.name = name;
                return r;
            }
            catch (const std::exception &e)
            {
                return {name, false, std::string("exception: ") + e.what()};
            }
        }

        SelftestResult projector_lemma()
        {
            ScenarioConfig sc;
            sc.B = 32;
            sc.U = 4;
            double worst = 0.0;
            for (int draw = 0; draw < 20; ++draw)
            {
                Rng rng(derive_seed(0x5e1f, (std::uint64_t)draw));
                const auto ch = draw_channel(rng, sc);
                Eigen::RowVectorXcd sJ(16);
                for (int k = 0; k < sJ.size(); ++k)
                    sJ[k] = complex_normal(rng, 1.0);
                const CMatrix Y_J = ch.hJ * sJ;
                const auto P = estimate_projection(estimate_jammer_covariance(Y_J));
                const CMatrix ref = orthogonal_complement_projector(ch.hJ);
                worst = std::max(worst, (P.P_hat - ref).cwiseAbs().maxCoeff());
            }
            return {"", worst <= 1e-9, fmt("max entry error", worst)};
        }

        SelftestResult single_antenna_clusters()
        {
            FrameConfig cfg;
            cfg.scenario.B = 32;
            cfg.scenario.U = 4;
            cfg.slicer.S = 1;
            cfg.data_slots = 4;
            double worst = 0.0;
            for (Method m : {Method::SNIPS, Method::CHOPS})
            {
                cfg.detector.kind = m;
                cfg.detector.domain = Domain::Slice;
                const FramePipeline sliced(cfg);
                cfg.detector.domain = Domain::Antenna;
                const FramePipeline antenna(cfg);
                for (std::uint64_t seed = 1; seed <= 5; ++seed)
                {
                    const auto a = sliced.run_trial(seed);
                    const auto b = antenna.run_trial(seed);
                    worst = std::max(worst, (a.soft_symbols - b.soft_symbols).cwiseAbs().maxCoeff());
                }
            }
            return {"", worst <= 1e-12, fmt("max soft-symbol difference", worst)};
        }

        SelftestResult one_bit_closed_form()
        {
            const double step = optimal_step_size(1);
            const auto bc = bussgang_constants(1, step);
            const double err = std::max({std::abs(step - 2.0 * std::sqrt(2.0 / pi)), std::abs(bc.gain - 2.0 / pi),
                                         std::abs(bc.distortion - (2.0 / pi) * (1.0 - 2.0 / pi))});
            return {"", err <= 1e-6, fmt("max deviation", err)};
        }

        SelftestResult distortion_uncorrelated()
        {
            Rng rng(12345);
            std::normal_distribution<double> nd;
            const int n = 200000;
            double worst = 0.0;
            for (int q : {1, 4, 8})
            {
                const auto spec = QuantizerSpec::with_bits(q);
                double sxd = 0, sxx = 0, sdd = 0, sx = 0, sd = 0;
                for (int i = 0; i < n; ++i)
                {
                    const double x = nd(rng);
                    const double d = quantize_scalar(x, spec) - spec.gain * x;
                    sx += x;
                    sd += d;
                    sxd += x * d;
                    sxx += x * x;
                    sdd += d * d;
                }
                const double cov = sxd / n - (sx / n) * (sd / n);
                const double vx = sxx / n - (sx / n) * (sx / n);
                const double vd = sdd / n - (sd / n) * (sd / n);
                worst = std::max(worst, std::abs(cov / std::sqrt(vx * vd)));
            }
            return {"", worst <= 1e-2, fmt("max |corr(d, x)|", worst)};
        }
    }

    std::vector<SelftestResult> run_selftests()
    {
        return {check("orthogonal-complement projector from noiseless jammer training", projector_lemma),
                check("S=1 beam-slicing equals antenna domain", single_antenna_clusters),
                check("1-bit step size and Bussgang constants", one_bit_closed_form),
                check("Bussgang distortion uncorrelated with input", distortion_uncorrelated)};
    }
}
