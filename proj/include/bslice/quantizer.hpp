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

#ifndef BSLICE_QUANTIZER_HPP
#define BSLICE_QUANTIZER_HPP

#include "bslice/types.hpp"

#include <optional>
#include <string>

namespace bslice
{
    inline constexpr int min_quantizer_bits = 1;
    inline constexpr int max_quantizer_bits = 12;

    // Cap used when a beam has zero training energy.
    inline constexpr double default_gain_cap = 1e6;

    /// q-bit uniform midrise quantizer with Bussgang constants for a N(0,1) input.
    /// An empty `bits` means infinite resolution (identity map, gain 1, no distortion).
    struct QuantizerSpec
    {
        std::optional<int> bits;
        double step = 0.0;       // Delta
        double gain = 1.0;       // Bussgang gain gamma
        double distortion = 0.0; // per-real-dimension distortion variance D

        bool is_infinite() const { return !bits.has_value(); }

        static QuantizerSpec infinite();
        // Uses the cached MSE-optimal step size and its Bussgang constants.
        static QuantizerSpec with_bits(int q);
    };

    std::string resolution_to_string(const std::optional<int> &bits);
    // "inf" or an integer in [1, 12].
    std::optional<int> parse_resolution(const std::string &text);

    struct BussgangConstants
    {
        double gain;
        double distortion;
    };

    /// Midrise quantizer:
    ///   Q(x) = Delta floor(x / Delta) + Delta / 2       if |x| < Delta 2^(q-1)
    ///          (Delta / 2)(2^q - 1) sign(x)              otherwise
    double quantize_scalar(double x, int q, double step);
    double quantize_scalar(double x, const QuantizerSpec &spec);

    // E[(Q(x) - x)^2] for x ~ N(0,1), evaluated cell by cell in closed form.
    double quantization_mse(int q, double step);

    // Golden-section minimization of quantization_mse; not cached.
    double minimize_step_size(int q, double tol = 1e-10);

    // Cached MSE-optimal step size for q in [1, 12]. Throws std::invalid_argument otherwise.
    double optimal_step_size(int q);

    // gamma = E[Q(x) x], D = E[Q(x)^2] - gamma^2 for x ~ N(0,1).
    BussgangConstants bussgang_constants(int q, double step);

    /// Diagonal of the per-beam gain-control matrix G.
    struct GainMatrix
    {
        RVector g;
    };

    /// g_b = sqrt(2T / ||row_b||^2) for a B x T training matrix.
    /// Throws std::domain_error if any row has zero energy.
    GainMatrix learn_gains(const CMatrix &Y);

    // As above, but zero-energy rows get `cap` (and a warning is logged).
    GainMatrix learn_gains(const CMatrix &Y, double cap);

    /// r = G^-1 (Q(Re{G y}) + i Q(Im{G y})), column-wise. Infinite resolution returns Y.
    CMatrix compquant(const CMatrix &Y, const GainMatrix &G, const QuantizerSpec &spec);
    CVector compquant(const CVector &y, const GainMatrix &G, const QuantizerSpec &spec);
}

#endif
