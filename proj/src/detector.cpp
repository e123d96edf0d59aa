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

#include "bslice/detector.hpp"

#include "bslice/estimator.hpp"

#include <spdlog/spdlog.h>

#include <bit>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace bslice
{
    std::string to_string(Method m)
    {
        switch (m)
        {
        case Method::SNIPS:
            return "snips";
        case Method::CHOPS:
            return "chops";
        case Method::LMMSE:
            return "lmmse";
        case Method::GeniePOS:
            return "genie-pos";
        case Method::GenieIAN:
            return "genie-ian";
        }
        return "unknown";
    }

    std::string to_string(Domain d)
    {
        return d == Domain::Antenna ? "ant" : "slice";
    }

    Method parse_method(const std::string &name)
    {
        for (auto m : {Method::SNIPS, Method::CHOPS, Method::LMMSE, Method::GeniePOS, Method::GenieIAN})
            if (to_string(m) == name)
                return m;
        throw std::invalid_argument("unknown detector '" + name + "' (expected snips|chops|lmmse|genie-pos|genie-ian)");
    }

    Domain parse_domain(const std::string &name)
    {
        if (name == "ant")
            return Domain::Antenna;
        if (name == "slice")
            return Domain::Slice;
        throw std::invalid_argument("unknown domain '" + name + "' (expected ant|slice)");
    }

    std::string DetectorMethod::to_string() const
    {
        return bslice::to_string(kind) + ",domain=" + bslice::to_string(domain) + ",adc=" + resolution_to_string(adc);
    }

    DetectorMethod DetectorMethod::parse(const std::string &text)
    {
        std::stringstream ss(text);
        std::string token;
        std::getline(ss, token, ',');
        DetectorMethod dm;
        dm.kind = parse_method(token);
        while (std::getline(ss, token, ','))
        {
            const auto eq = token.find('=');
            if (eq == std::string::npos)
                throw std::invalid_argument("detector modifier '" + token + "' is not key=value");
            const std::string key = token.substr(0, eq);
            const std::string value = token.substr(eq + 1);
            if (key == "domain")
                dm.domain = parse_domain(value);
            else if (key == "adc")
                dm.adc = parse_resolution(value);
            else
                throw std::invalid_argument("unknown detector modifier '" + key + "'");
        }
        return dm;
    }

    CMatrix equalizer_gram(const CMatrix &H, const CMatrix &C, const QuantizerSpec &spec, const GainMatrix &G,
                           double N0, double Es)
    {
        const Eigen::Index B = H.rows();
        if (C.size() != 0 && (C.rows() != B || C.cols() != B))
            throw std::invalid_argument("equalizer_gram: covariance dimension mismatch");
        if (!(spec.gain > 0.0))
            throw std::invalid_argument("equalizer_gram: Bussgang gain must be positive");

        CMatrix A = H * H.adjoint();
        RVector noise = RVector::Constant(B, N0);
        if (spec.distortion > 0.0)
        {
            if (G.g.size() != B)
                throw std::invalid_argument("equalizer_gram: gain vector dimension mismatch");
            if ((G.g.array() <= 0.0).any())
                throw std::invalid_argument("equalizer_gram: gains must be positive");
            noise.array() += 2.0 * spec.distortion / (spec.gain * spec.gain) / G.g.array().square();
        }
        if (C.size() != 0)
            A += C / Es;
        A.diagonal().array() += noise.array() / Es;
        // exact Hermitian symmetry for the factorization
        return 0.5 * (A + A.adjoint());
    }

    namespace
    {
        EqualizerMatrix solve_equalizer(const CMatrix &H, const CMatrix &A, double gain, Method method)
        {
            EqualizerMatrix eq;
            eq.method = method;
            Eigen::LLT<CMatrix> llt(A);
            if (llt.info() != Eigen::Success)
            {
                const double delta = 1e-10 * A.trace().real() / (double)A.rows();
                spdlog::warn("{} equalizer: Cholesky failed, adding diagonal loading {:.3e}", to_string(method), delta);
                CMatrix loaded = A;
                loaded.diagonal().array() += delta;
                llt.compute(loaded);
                if (llt.info() != Eigen::Success)
                    throw std::runtime_error(to_string(method) + " equalizer: matrix is not positive definite");
                eq.regularized = true;
            }
            eq.W = llt.solve(H).adjoint() / gain;
            return eq;
        }
    }

    EqualizerMatrix snips_matrix(const CMatrix &H_hat, const CMatrix &C_hat, const QuantizerSpec &spec,
                                 const GainMatrix &G_P, double N0, double Es)
    {
        return solve_equalizer(H_hat, equalizer_gram(H_hat, C_hat, spec, G_P, N0, Es), spec.gain, Method::SNIPS);
    }

    EqualizerMatrix chops_matrix(const CMatrix &H_tilde, const QuantizerSpec &spec, const GainMatrix &G_P,
                                 double N0, double Es)
    {
        return solve_equalizer(H_tilde, equalizer_gram(H_tilde, CMatrix(), spec, G_P, N0, Es), spec.gain,
                               Method::CHOPS);
    }

    CVector detect(const EqualizerMatrix &W, const CVector &r)
    {
        if (W.W.cols() != r.size())
            throw std::invalid_argument("detect: dimension mismatch");
        return W.W * r;
    }

    CMatrix detect(const EqualizerMatrix &W, const CMatrix &R)
    {
        if (W.W.cols() != R.rows())
            throw std::invalid_argument("detect: dimension mismatch");
        return W.W * R;
    }

    Constellation Constellation::qam(int M, double Es)
    {
        const int m = (int)std::lround(std::sqrt((double)M));
        if (M < 4 || m * m != M || !std::has_single_bit((unsigned)M))
            throw std::invalid_argument("Constellation::qam: M must be an even power of two (4, 16, 64, ...)");
        if (!(Es > 0.0))
            throw std::invalid_argument("Constellation::qam: Es must be positive");

        const int axis_bits = std::countr_zero((unsigned)m);
        // mean energy of the unscaled grid {+-1, +-3, ...}^2 is 2 (M - 1) / 3
        const double scale = std::sqrt(Es * 3.0 / (2.0 * (M - 1)));
        Constellation c;
        c.bits_per_symbol = 2 * axis_bits;
        c.Es = Es;
        for (int i = 0; i < m; ++i)
            for (int k = 0; k < m; ++k)
            {
                c.points.emplace_back(scale * (2 * i - (m - 1)), scale * (2 * k - (m - 1)));
                const std::uint32_t gi = (unsigned)i ^ ((unsigned)i >> 1);
                const std::uint32_t gk = (unsigned)k ^ ((unsigned)k >> 1);
                c.labels.push_back((gi << axis_bits) | gk);
            }
        return c;
    }

    Constellation Constellation::from_name(const std::string &name, double Es)
    {
        if (name == "qpsk" || name == "4qam")
            return qam(4, Es);
        if (name == "16qam")
            return qam(16, Es);
        if (name == "64qam")
            return qam(64, Es);
        throw std::invalid_argument("unknown constellation '" + name + "' (expected qpsk|16qam|64qam)");
    }

    std::string Constellation::name() const
    {
        return points.size() == 4 ? "qpsk" : std::to_string(points.size()) + "qam";
    }

    std::vector<int> slice_symbols(const CVector &soft, const Constellation &cons)
    {
        std::vector<int> out(soft.size());
        for (Eigen::Index n = 0; n < soft.size(); ++n)
        {
            int best = 0;
            double best_dist = std::norm(soft[n] - cons.points[0]);
            for (int p = 1; p < (int)cons.points.size(); ++p)
            {
                const double d = std::norm(soft[n] - cons.points[p]);
                if (d < best_dist)
                {
                    best_dist = d;
                    best = p;
                }
            }
            out[n] = best;
        }
        return out;
    }

    std::vector<int> symbol_bits(int index, const Constellation &cons)
    {
        std::vector<int> bits(cons.bits_per_symbol);
        const std::uint32_t label = cons.labels.at(index);
        for (int b = 0; b < cons.bits_per_symbol; ++b)
            bits[b] = (int)((label >> (cons.bits_per_symbol - 1 - b)) & 1u);
        return bits;
    }

    int bit_errors(int a, int b, const Constellation &cons)
    {
        return std::popcount(cons.labels.at(a) ^ cons.labels.at(b));
    }

    GenieEqualizer genie_baselines(Method method, const CMatrix &H_hat, const GenieInputs &genie,
                                   const QuantizerSpec &spec, const GainMatrix &G_P, double N0, double Es)
    {
        if (genie.j_hat.size() != H_hat.rows() || !(genie.j_hat.squaredNorm() > 0.0))
            throw std::invalid_argument("genie_baselines: genie jammer channel missing");
        const Eigen::Index B = H_hat.rows();
        if (method == Method::GeniePOS)
        {
            CMatrix P = orthogonal_complement_projector(genie.j_hat);
            EqualizerMatrix W = chops_matrix(P * H_hat, spec, G_P, N0, Es);
            W.method = Method::GeniePOS;
            return {std::move(W), std::move(P)};
        }
        if (method == Method::GenieIAN)
        {
            const CMatrix C = genie.Ej * (genie.j_hat * genie.j_hat.adjoint());
            EqualizerMatrix W = snips_matrix(H_hat, C, spec, G_P, N0, Es);
            W.method = Method::GenieIAN;
            return {std::move(W), CMatrix::Identity(B, B)};
        }
        throw std::invalid_argument("genie_baselines: " + to_string(method) + " is not a genie method");
    }
}
