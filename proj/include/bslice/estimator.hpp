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

#ifndef BSLICE_ESTIMATOR_HPP
#define BSLICE_ESTIMATOR_HPP

#include "bslice/quantizer.hpp"
#include "bslice/types.hpp"

namespace bslice
{
    // Jammer interference statistics learned while the UEs are silent.
    struct JammerStats
    {
        CMatrix C_hat;  // B x B, Hermitian PSD
        GainMatrix G_J; // gains learned from the jammer-phase receive matrix
        int N = 0;      // jammer training slots
    };

    // Beam-sliced channel estimate. `projected` marks the CHOPS estimate in the
    // jammer-free subspace.
    struct ChannelEstimate
    {
        CMatrix H_hat;  // B x U
        GainMatrix G_P; // gains learned from the pilot receive matrix, reused for data
        bool projected = false;
    };

    struct ProjectionMatrix
    {
        CMatrix P_hat;               // B x B Hermitian
        bool jammer_detected = true; // false => P_hat = I
    };

    /// S_P = sqrt(U Es) F_U, so that S_P S_P^H = U Es I and every entry has modulus sqrt(Es).
    CMatrix pilot_matrix(int U, double Es);

    // C_hat = (1/N) R_J R_J^H for a B x N quantized jammer-phase receive matrix.
    CMatrix estimate_jammer_covariance(const CMatrix &R_J);

    // Default "no jammer detected" trace threshold: 1e-12 * B.
    double default_trace_threshold(Eigen::Index B);

    /// P_hat = I - C_hat / tr(C_hat). When tr(C_hat) <= threshold no jammer is
    /// assumed: returns P_hat = I with jammer_detected = false.
    ProjectionMatrix estimate_projection(const CMatrix &C_hat, double trace_threshold);
    ProjectionMatrix estimate_projection(const CMatrix &C_hat);

    // Exact projector onto the orthogonal complement of span{j}.
    CMatrix orthogonal_complement_projector(const CVector &j);

    // H_hat = (1/(U Es)) R_P S_P^H for orthogonal pilots.
    CMatrix ls_channel_estimate(const CMatrix &R_P, const CMatrix &S_P, double Es);

    // H_tilde = P_hat H_hat.
    ChannelEstimate project_channel(const ProjectionMatrix &P, const ChannelEstimate &est);
}

#endif
