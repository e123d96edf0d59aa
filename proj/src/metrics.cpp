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

#include "bslice/metrics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace bslice
{
    std::vector<double> compute_rmsse(const CMatrix &tx, const CMatrix &soft)
    {
        if (tx.rows() != soft.rows() || tx.cols() != soft.cols())
            throw std::invalid_argument("compute_rmsse: dimension mismatch");
        if (tx.cols() < 1)
            throw std::invalid_argument("compute_rmsse: need at least one data slot");
        std::vector<double> out(tx.rows());
        for (Eigen::Index u = 0; u < tx.rows(); ++u)
        {
            const double den = tx.row(u).squaredNorm();
            if (!(den > 0.0))
                throw std::domain_error("compute_rmsse: zero transmit energy for UE " + std::to_string(u));
            out[u] = std::sqrt((soft.row(u) - tx.row(u)).squaredNorm() / den);
        }
        return out;
    }

    double served_fraction(const std::vector<double> &rmsse, double threshold)
    {
        if (rmsse.empty())
            throw std::invalid_argument("served_fraction: no samples");
        std::size_t served = 0;
        for (double v : rmsse)
            served += v < threshold ? 1 : 0;
        return (double)served / (double)rmsse.size();
    }

    ConfidenceInterval wilson_interval(std::int64_t k, std::int64_t n, double z)
    {
        if (n <= 0)
            return {0.0, 1.0};
        const double nn = (double)n;
        const double p = (double)k / nn;
        const double z2 = z * z;
        const double centre = (p + z2 / (2.0 * nn)) / (1.0 + z2 / nn);
        const double half = z * std::sqrt(p * (1.0 - p) / nn + z2 / (4.0 * nn * nn)) / (1.0 + z2 / nn);
        // the bounds are exactly 0 and 1 at the extremes; avoid rounding residue there
        return {k == 0 ? 0.0 : std::max(0.0, centre - half), k == n ? 1.0 : std::min(1.0, centre + half)};
    }

    bool operator==(const TrialMetrics &a, const TrialMetrics &b)
    {
        return a.bit_errors == b.bit_errors && a.bits == b.bits && a.rmsse == b.rmsse;
    }

    void MetricRecord::add(std::int64_t trial_index, TrialMetrics m)
    {
        if (!trials.emplace(trial_index, std::move(m)).second)
            throw std::logic_error("MetricRecord: duplicate trial index " + std::to_string(trial_index));
    }

    void MetricRecord::merge(const MetricRecord &other)
    {
        for (const auto &[idx, m] : other.trials)
            add(idx, m);
        if (!failure && other.failure)
            failure = other.failure;
    }

    std::int64_t MetricRecord::bit_errors() const
    {
        std::int64_t s = 0;
        for (const auto &[idx, m] : trials)
            s += m.bit_errors;
        return s;
    }

    std::int64_t MetricRecord::bits() const
    {
        std::int64_t s = 0;
        for (const auto &[idx, m] : trials)
            s += m.bits;
        return s;
    }

    double MetricRecord::ber() const
    {
        const auto n = bits();
        return n > 0 ? (double)bit_errors() / (double)n : std::numeric_limits<double>::quiet_NaN();
    }

    ConfidenceInterval MetricRecord::ber_ci() const
    {
        return wilson_interval(bit_errors(), bits());
    }

    std::vector<double> MetricRecord::rmsse_samples() const
    {
        std::vector<double> out;
        for (const auto &[idx, m] : trials)
            out.insert(out.end(), m.rmsse.begin(), m.rmsse.end());
        return out;
    }

    double MetricRecord::served_frac(double threshold) const
    {
        const auto samples = rmsse_samples();
        return samples.empty() ? std::numeric_limits<double>::quiet_NaN() : served_fraction(samples, threshold);
    }

    double MetricRecord::mean_rmsse() const
    {
        const auto samples = rmsse_samples();
        if (samples.empty())
            return std::numeric_limits<double>::quiet_NaN();
        double s = 0.0;
        for (double v : samples)
            s += v;
        return s / (double)samples.size();
    }
}
