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

#include "bslice/estimator.hpp"

#include "bslice/beamslice.hpp"

#include <cmath>
#include <stdexcept>

namespace bslice
{
    CMatrix pilot_matrix(int U, double Es)
    {
        if (U < 1)
            throw std::invalid_argument("pilot_matrix: U must be positive");
        if (!(Es > 0.0))
            throw std::invalid_argument("pilot_matrix: Es must be positive");
        return std::sqrt(U * Es) * build_base_transform(TransformKind::DFT, U);
    }

    CMatrix estimate_jammer_covariance(const CMatrix &R_J)
    {
        if (R_J.cols() < 1)
            throw std::invalid_argument("estimate_jammer_covariance: need at least one training slot");
        CMatrix C = (R_J * R_J.adjoint()) / (double)R_J.cols();
        // exact Hermitian symmetry
        return 0.5 * (C + C.adjoint());
    }

    double default_trace_threshold(Eigen::Index B)
    {
        return 1e-12 * (double)B;
    }

    ProjectionMatrix estimate_projection(const CMatrix &C_hat, double trace_threshold)
    {
        if (C_hat.rows() != C_hat.cols())
            throw std::invalid_argument("estimate_projection: covariance must be square");
        const Eigen::Index B = C_hat.rows();
        const double tr = C_hat.trace().real();
        if (!(tr > trace_threshold))
            return {CMatrix::Identity(B, B), false};
        return {CMatrix::Identity(B, B) - C_hat / tr, true};
    }

    ProjectionMatrix estimate_projection(const CMatrix &C_hat)
    {
        return estimate_projection(C_hat, default_trace_threshold(C_hat.rows()));
    }

    CMatrix orthogonal_complement_projector(const CVector &j)
    {
        const double energy = j.squaredNorm();
        if (!(energy > 0.0))
            throw std::invalid_argument("orthogonal_complement_projector: zero vector");
        return CMatrix::Identity(j.size(), j.size()) - (j * j.adjoint()) / energy;
    }

    CMatrix ls_channel_estimate(const CMatrix &R_P, const CMatrix &S_P, double Es)
    {
        if (S_P.rows() != S_P.cols() || R_P.cols() != S_P.cols())
            throw std::invalid_argument("ls_channel_estimate: pilot dimensions do not match");
        const double U = (double)S_P.rows();
        return (R_P * S_P.adjoint()) / (U * Es);
    }

    ChannelEstimate project_channel(const ProjectionMatrix &P, const ChannelEstimate &est)
    {
        if (P.P_hat.cols() != est.H_hat.rows())
            throw std::invalid_argument("project_channel: dimension mismatch");
        return {P.P_hat * est.H_hat, est.G_P, true};
    }
}
