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

#include "bslice/beamslice.hpp"

#include <cmath>
#include <stdexcept>

namespace bslice
{
    std::string to_string(TransformKind kind)
    {
        switch (kind)
        {
        case TransformKind::DFT:
            return "dft";
        case TransformKind::Haar:
            return "haar";
        case TransformKind::Hadamard:
            return "hadamard";
        case TransformKind::Hartley:
            return "hartley";
        case TransformKind::DCT:
            return "dct";
        case TransformKind::Noiselet:
            return "noiselet";
        case TransformKind::Identity:
            return "identity";
        }
        return "unknown";
    }

    TransformKind parse_transform_kind(const std::string &name)
    {
        for (auto k : {TransformKind::DFT, TransformKind::Haar, TransformKind::Hadamard, TransformKind::Hartley,
                       TransformKind::DCT, TransformKind::Noiselet, TransformKind::Identity})
            if (to_string(k) == name)
                return k;
        throw std::invalid_argument("unknown transform '" + name +
                                    "' (expected dft|haar|hadamard|hartley|dct|noiselet|identity)");
    }

    bool requires_power_of_two(TransformKind kind)
    {
        return kind == TransformKind::Haar || kind == TransformKind::Hadamard || kind == TransformKind::Noiselet;
    }

    namespace
    {
        bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

        CMatrix haar(int S)
        {
            CMatrix H = CMatrix::Ones(1, 1);
            const double r = 1.0 / std::sqrt(2.0);
            for (int n = 1; n < S; n *= 2)
            {
                CMatrix next = CMatrix::Zero(2 * n, 2 * n);
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j)
                    {
                        next(i, 2 * j) = r * H(i, j);
                        next(i, 2 * j + 1) = r * H(i, j);
                    }
                for (int i = 0; i < n; ++i)
                {
                    next(n + i, 2 * i) = r;
                    next(n + i, 2 * i + 1) = -r;
                }
                H = std::move(next);
            }
            return H;
        }

        // Kronecker recursion X_{2n} = K (x) X_n
        CMatrix kronecker_power(const Eigen::Matrix2cd &K, int S)
        {
            CMatrix X = CMatrix::Ones(1, 1);
            for (int n = 1; n < S; n *= 2)
            {
                CMatrix next(2 * n, 2 * n);
                for (int a = 0; a < 2; ++a)
                    for (int b = 0; b < 2; ++b)
                        next.block(a * n, b * n, n, n) = K(a, b) * X;
                X = std::move(next);
            }
            return X;
        }
    }

    CMatrix build_base_transform(TransformKind kind, int S)
    {
        if (S < 1)
            throw std::invalid_argument("build_base_transform: size must be positive");
        if (requires_power_of_two(kind) && !is_power_of_two(S))
            throw std::invalid_argument("build_base_transform: " + to_string(kind) + " requires a power-of-two size");

        const double norm = 1.0 / std::sqrt((double)S);
        CMatrix T(S, S);
        switch (kind)
        {
        case TransformKind::DFT:
            for (int k = 0; k < S; ++k)
                for (int l = 0; l < S; ++l)
                    // reduce k*l mod S first so large sizes stay accurate
                    T(k, l) = std::polar(norm, -2.0 * pi * (double)((k * l) % S) / S);
            break;
        case TransformKind::Hadamard:
        {
            Eigen::Matrix2cd K;
            K << 1.0, 1.0, 1.0, -1.0;
            T = norm * kronecker_power(K, S);
            break;
        }
        case TransformKind::Haar:
            T = haar(S);
            break;
        case TransformKind::Hartley:
            for (int k = 0; k < S; ++k)
                for (int l = 0; l < S; ++l)
                {
                    const double x = 2.0 * pi * (double)((k * l) % S) / S;
                    T(k, l) = norm * (std::cos(x) + std::sin(x));
                }
            break;
        case TransformKind::DCT:
            for (int k = 0; k < S; ++k)
            {
                const double alpha = k == 0 ? std::sqrt(1.0 / S) : std::sqrt(2.0 / S);
                for (int l = 0; l < S; ++l)
                    T(k, l) = alpha * std::cos(pi * (2.0 * l + 1.0) * k / (2.0 * S));
            }
            break;
        case TransformKind::Noiselet:
        {
            Eigen::Matrix2cd K;
            K << cplx(0.5, -0.5), cplx(0.5, 0.5), cplx(0.5, 0.5), cplx(0.5, -0.5);
            T = kronecker_power(K, S);
            break;
        }
        case TransformKind::Identity:
            T = CMatrix::Identity(S, S);
            break;
        }
        return T;
    }

    std::vector<double> default_rotations(int B, int C)
    {
        if (C < 1 || B < 1 || B % C != 0)
            throw std::invalid_argument("default_rotations: B must be a positive multiple of C");
        std::vector<double> phis(C);
        for (int c = 0; c < C; ++c)
            phis[c] = 2.0 * pi / B * c;
        return phis;
    }

    BeamSlicer::BeamSlicer(TransformKind kind, int S, int B, std::vector<double> phis)
        : kind_(kind), S_(S), B_(B), phis_(std::move(phis))
    {
        if (S < 1 || B < 1 || B % S != 0)
            throw std::invalid_argument("BeamSlicer: B must be a positive multiple of the cluster size S");
        if ((int)phis_.size() != B / S)
            throw std::invalid_argument("BeamSlicer: need exactly one rotation angle per cluster");

        const CMatrix T = build_base_transform(kind, S);
        blocks_.reserve(phis_.size());
        for (double phi : phis_)
        {
            CMatrix Vc = T;
            for (int s = 1; s < S; ++s)
                Vc.col(s) *= std::polar(1.0, -phi * s);
            blocks_.push_back(std::move(Vc));
        }
    }

    CVector BeamSlicer::apply(const CVector &y) const
    {
        if (y.size() != B_)
            throw std::invalid_argument("BeamSlicer::apply: dimension mismatch");
        CVector out(B_);
        for (int c = 0; c < C(); ++c)
            out.segment(c * S_, S_).noalias() = blocks_[c] * y.segment(c * S_, S_);
        return out;
    }

    CMatrix BeamSlicer::apply(const CMatrix &Y) const
    {
        if (Y.rows() != B_)
            throw std::invalid_argument("BeamSlicer::apply: dimension mismatch");
        CMatrix out(B_, Y.cols());
        for (int c = 0; c < C(); ++c)
            out.middleRows(c * S_, S_).noalias() = blocks_[c] * Y.middleRows(c * S_, S_);
        return out;
    }

    CMatrix BeamSlicer::dense() const
    {
        CMatrix V = CMatrix::Zero(B_, B_);
        for (int c = 0; c < C(); ++c)
            V.block(c * S_, c * S_, S_, S_) = blocks_[c];
        return V;
    }

    std::vector<double> BeamSlicer::effective_beam_frequencies() const
    {
        if (kind_ != TransformKind::DFT)
            throw std::logic_error("effective_beam_frequencies: only defined for the DFT transform");
        std::vector<double> freqs;
        freqs.reserve(B_);
        for (int c = 0; c < C(); ++c)
            for (int k = 0; k < S_; ++k)
            {
                double w = std::fmod(2.0 * pi * k / S_ + phis_[c], 2.0 * pi);
                if (w < 0.0)
                    w += 2.0 * pi;
                freqs.push_back(w);
            }
        return freqs;
    }

    BeamSlicer build_beamslicer(TransformKind kind, int S, int B, const std::vector<double> &phis)
    {
        return BeamSlicer(kind, S, B, phis);
    }
}
