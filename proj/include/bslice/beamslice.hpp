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

#ifndef BSLICE_BEAMSLICE_HPP
#define BSLICE_BEAMSLICE_HPP

#include "bslice/types.hpp"

#include <string>
#include <vector>

namespace bslice
{
    enum class TransformKind
    {
        DFT,
        Haar,
        Hadamard,
        Hartley,
        DCT,
        Noiselet,
        Identity
    };

    std::string to_string(TransformKind kind);
    TransformKind parse_transform_kind(const std::string &name);

    // Haar, Hadamard and Noiselet need a power-of-two size.
    bool requires_power_of_two(TransformKind kind);

    /// S x S unitary base transform T.
    ///  - DFT:      (1/sqrt(S)) exp(-i 2 pi k l / S)
    ///  - Hadamard: Sylvester construction / sqrt(S)
    ///  - Haar:     orthonormal Haar matrix (recursive)
    ///  - Hartley:  cas(2 pi k l / S) / sqrt(S)
    ///  - DCT:      orthonormal DCT-II
    ///  - Noiselet: Kronecker powers of (1/2)[[1-i, 1+i], [1+i, 1-i]]
    ///  - Identity: I_S
    /// Throws std::invalid_argument on an invalid size.
    CMatrix build_base_transform(TransformKind kind, int S);

    // Uniformly-strided cluster rotations phi_c = (2 pi / B) c, c = 0..C-1.
    std::vector<double> default_rotations(int B, int C);

    /// Block-diagonal analog spatial transform V = diag(V_1, ..., V_C) with
    /// V_c = T diag(1, e^{-i phi_c}, ..., e^{-i phi_c (S-1)}).
    /// Stored per cluster; immutable after construction.
    class BeamSlicer
    {
    public:
        BeamSlicer(TransformKind kind, int S, int B, std::vector<double> phis);

        int B() const { return B_; }
        int S() const { return S_; }
        int C() const { return B_ / S_; }
        TransformKind kind() const { return kind_; }
        const std::vector<double> &rotations() const { return phis_; }
        const CMatrix &block(int c) const { return blocks_.at(c); }

        // y_hat = V y, applied cluster by cluster.
        CVector apply(const CVector &y) const;
        // Column-wise V Y.
        CMatrix apply(const CMatrix &Y) const;

        // Dense B x B matrix V (tests and diagnostics only).
        CMatrix dense() const;

        /// Angular frequency (in [0, 2 pi)) of each output row (c, k): 2 pi k / S + phi_c.
        /// Only defined for the DFT; throws std::logic_error otherwise.
        std::vector<double> effective_beam_frequencies() const;

    private:
        TransformKind kind_;
        int S_;
        int B_;
        std::vector<double> phis_;
        std::vector<CMatrix> blocks_;
    };

    BeamSlicer build_beamslicer(TransformKind kind, int S, int B, const std::vector<double> &phis);
}

#endif
