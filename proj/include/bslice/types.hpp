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

#ifndef BSLICE_TYPES_HPP
#define BSLICE_TYPES_HPP

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <numbers>
#include <random>

namespace bslice
{
    using cplx = std::complex<double>;
    using CMatrix = Eigen::MatrixXcd;
    using CVector = Eigen::VectorXcd;
    using RVector = Eigen::VectorXd;

    // One generator per trial; streams never shared between workers.
    using Rng = std::mt19937_64;

    inline constexpr double pi = std::numbers::pi;

    inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

    // splitmix64 finalizer; used to derive independent per-point / per-trial seeds
    inline std::uint64_t mix_seed(std::uint64_t x)
    {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a)
    {
        return mix_seed(mix_seed(base) ^ mix_seed(a + 0x632be59bd9b4e019ULL));
    }

    inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b)
    {
        return derive_seed(derive_seed(base, a), b);
    }

    // Circularly-symmetric complex Gaussian with the given variance (zero allowed).
    inline cplx complex_normal(Rng &rng, double variance = 1.0)
    {
        std::normal_distribution<double> n(0.0, 1.0);
        const double scale = std::sqrt(variance / 2.0);
        const double re = n(rng);
        const double im = n(rng);
        return {scale * re, scale * im};
    }

    inline CMatrix complex_normal_matrix(Rng &rng, Eigen::Index rows, Eigen::Index cols, double variance = 1.0)
    {
        CMatrix out(rows, cols);
        for (Eigen::Index c = 0; c < cols; ++c)
            for (Eigen::Index r = 0; r < rows; ++r)
                out(r, c) = complex_normal(rng, variance);
        return out;
    }
}

#endif
