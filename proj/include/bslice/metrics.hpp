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

#ifndef BSLICE_METRICS_HPP
#define BSLICE_METRICS_HPP

#include "bslice/types.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace bslice
{
    // 16-QAM EVM limit used for the served-UE criterion.
    inline constexpr double served_rmsse_threshold = 0.125;

    /// Per-UE root mean-square symbol error over the data slots (rows are UEs):
    ///   sqrt(sum_k |s*_uk - s_uk|^2 / sum_k |s_uk|^2)
    /// Throws std::domain_error if a UE transmitted only zeros.
    std::vector<double> compute_rmsse(const CMatrix &tx, const CMatrix &soft);

    // Fraction of samples strictly below the threshold.
    double served_fraction(const std::vector<double> &rmsse, double threshold = served_rmsse_threshold);

    struct ConfidenceInterval
    {
        double lo;
        double hi;
    };

    // Wilson score interval for k successes out of n (z = 1.96 for 95%).
    ConfidenceInterval wilson_interval(std::int64_t k, std::int64_t n, double z = 1.959963984540054);

    struct TrialMetrics
    {
        std::int64_t bit_errors = 0;
        std::int64_t bits = 0;
        std::vector<double> rmsse;
    };

    /// Accumulated results of one operating point. Trials are keyed by their index so
    /// that merging partial records is exact and independent of merge order.
    struct MetricRecord
    {
        std::map<std::int64_t, TrialMetrics> trials;
        std::uint64_t seed = 0;
        std::string config_hash;
        std::optional<std::string> failure;

        void add(std::int64_t trial_index, TrialMetrics m);
        // Throws std::logic_error if both records hold the same trial index.
        void merge(const MetricRecord &other);

        std::int64_t trial_count() const { return (std::int64_t)trials.size(); }
        std::int64_t bit_errors() const;
        std::int64_t bits() const;
        double ber() const;
        ConfidenceInterval ber_ci() const;
        std::vector<double> rmsse_samples() const; // in trial order
        double served_frac(double threshold = served_rmsse_threshold) const;
        double mean_rmsse() const;
    };

    bool operator==(const TrialMetrics &a, const TrialMetrics &b);
}

#endif
