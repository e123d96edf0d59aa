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

#ifndef BSLICE_DETECTOR_HPP
#define BSLICE_DETECTOR_HPP

#include "bslice/quantizer.hpp"
#include "bslice/types.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace bslice
{
    enum class Method
    {
        SNIPS,     // soft-nulling: estimated jammer covariance treated as colored noise
        CHOPS,     // projection onto the complement of the estimated jammer subspace
        LMMSE,     // no mitigation: Bussgang-aware LMMSE that ignores the jammer
        GeniePOS,  // CHOPS pipeline with the exact jammer projector
        GenieIAN   // SNIPS pipeline with the exact jammer covariance
    };

    // Antenna domain bypasses the beam-slicer entirely (V = I).
    enum class Domain
    {
        Antenna,
        Slice
    };

    std::string to_string(Method m);
    std::string to_string(Domain d);
    Method parse_method(const std::string &name);
    Domain parse_domain(const std::string &name);

    /// Detector selection as serialized in configs: "snips|chops|lmmse|genie-pos|genie-ian"
    /// followed by optional ",domain=ant|slice" and ",adc=inf|<q>" modifiers.
    struct DetectorMethod
    {
        Method kind = Method::SNIPS;
        Domain domain = Domain::Slice;
        std::optional<int> adc = 4; // empty => infinite resolution

        bool genie_channel() const { return kind == Method::GeniePOS || kind == Method::GenieIAN; }
        bool infinite_resolution() const { return !adc.has_value(); }

        std::string to_string() const;
        static DetectorMethod parse(const std::string &text);
    };

    struct EqualizerMatrix
    {
        CMatrix W; // U x B
        Method method = Method::SNIPS;
        bool regularized = false; // diagonal loading was needed for the factorization
    };

    /// Hermitian positive-definite matrix inverted by the SNIPS/CHOPS equalizers:
    ///   H H^H + (1/Es)(C + N0 I + 2 D gamma^-2 G^-2)
    /// `C` may be empty (treated as zero). `G` is ignored when D = 0.
    CMatrix equalizer_gram(const CMatrix &H, const CMatrix &C, const QuantizerSpec &spec, const GainMatrix &G,
                           double N0, double Es);

    /// W_SNIPS = (1/gamma) H^H (H H^H + (1/Es)(C_hat + N0 I + 2 D gamma^-2 G_P^-2))^-1,
    /// computed with a Cholesky solve. If the factorization fails, delta I with
    /// delta = 1e-10 tr/B is added and a warning is logged.
    EqualizerMatrix snips_matrix(const CMatrix &H_hat, const CMatrix &C_hat, const QuantizerSpec &spec,
                                 const GainMatrix &G_P, double N0, double Es);

    // Same as snips_matrix without the jammer covariance, applied to the projected channel.
    EqualizerMatrix chops_matrix(const CMatrix &H_tilde, const QuantizerSpec &spec, const GainMatrix &G_P,
                                 double N0, double Es);

    // s* = W r (column-wise for matrices). CHOPS callers project r first.
    CVector detect(const EqualizerMatrix &W, const CVector &r);
    CMatrix detect(const EqualizerMatrix &W, const CMatrix &R);

    /// Square QAM with per-axis reflected Gray labels. Point index p = i * m + k where
    /// i indexes the in-phase level and k the quadrature level (both ascending), and the
    /// label is gray(i) followed by gray(k), MSB first.
    struct Constellation
    {
        std::vector<cplx> points;
        std::vector<std::uint32_t> labels;
        int bits_per_symbol = 0;
        double Es = 1.0;

        static Constellation qam(int M, double Es = 1.0);
        static Constellation from_name(const std::string &name, double Es = 1.0); // "qpsk", "16qam", "64qam"
        std::string name() const;
    };

    /// Nearest constellation point per entry (ties resolved to the lowest index).
    std::vector<int> slice_symbols(const CVector &soft, const Constellation &cons);

    // Bits of a symbol index, MSB first.
    std::vector<int> symbol_bits(int index, const Constellation &cons);

    // Number of differing label bits between two symbol indices.
    int bit_errors(int a, int b, const Constellation &cons);

    struct GenieInputs
    {
        CVector j_hat;   // true (beam-sliced) jammer channel
        double Ej = 0.0; // true jammer symbol variance
    };

    struct GenieEqualizer
    {
        EqualizerMatrix W;
        CMatrix P; // projector applied to r before W (identity for IAN)
    };

    /// GeniePOS: exact P = I - j j^H / ||j||^2, W = chops_matrix(P H_hat).
    /// GenieIAN: exact C_j = Ej j j^H, W = snips_matrix(H_hat, C_j).
    /// Throws std::invalid_argument for non-genie methods or a missing (zero) jammer channel.
    GenieEqualizer genie_baselines(Method method, const CMatrix &H_hat, const GenieInputs &genie,
                                   const QuantizerSpec &spec, const GainMatrix &G_P, double N0, double Es);
}

#endif
