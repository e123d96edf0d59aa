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

#include <catch_amalgamated.hpp>

#include <cmath>

using namespace bslice;
using Catch::Matchers::WithinAbs;

TEST_CASE("RMSSE", "[metrics]")
{
    Rng rng(1);
    const CMatrix s = complex_normal_matrix(rng, 3, 7);
    for (double v : compute_rmsse(s, s))
        REQUIRE(v == 0.0);
    for (double v : compute_rmsse(s, 1.1 * s))
        REQUIRE_THAT(v, WithinAbs(0.1, 1e-12));
    for (double v : compute_rmsse(s, CMatrix::Zero(3, 7)))
        REQUIRE_THAT(v, WithinAbs(1.0, 1e-15));

    CMatrix zero_row = s;
    zero_row.row(1).setZero();
    REQUIRE_THROWS_AS(compute_rmsse(zero_row, s), std::domain_error);
    REQUIRE_THROWS_AS(compute_rmsse(s, CMatrix::Zero(2, 7)), std::invalid_argument);
}

TEST_CASE("served fraction", "[metrics]")
{
    REQUIRE(served_fraction({0.0, 0.0, 0.0}) == 1.0);
    REQUIRE(served_fraction({0.2, 0.2}) == 0.0);
    REQUIRE(served_fraction({0.05, 0.5, 0.05, 0.5}) == 0.5);
    REQUIRE(served_fraction({0.125}) == 0.0); // strictly below the threshold
    REQUIRE_THROWS_AS(served_fraction({}), std::invalid_argument);
}

TEST_CASE("Wilson interval", "[metrics]")
{
    // reference values computed by hand from the score-interval formula
    const auto ci = wilson_interval(10, 100);
    REQUIRE_THAT(ci.lo, WithinAbs(0.05522914, 1e-7));
    REQUIRE_THAT(ci.hi, WithinAbs(0.17436566, 1e-7));

    const auto zero = wilson_interval(0, 50);
    REQUIRE(zero.lo == 0.0);
    REQUIRE(zero.hi > 0.0);
    const auto all = wilson_interval(50, 50);
    REQUIRE(all.hi == 1.0);
    REQUIRE(all.lo < 1.0);
    for (int k : {1, 7, 33, 99})
    {
        const auto c = wilson_interval(k, 100);
        REQUIRE(c.lo < k / 100.0);
        REQUIRE(c.hi > k / 100.0);
    }
}

TEST_CASE("metric records", "[metrics]")
{
    MetricRecord a, b;
    a.add(0, {3, 100, {0.1, 0.2}});
    a.add(2, {1, 100, {0.05}});
    b.add(1, {0, 100, {0.3}});

    SECTION("aggregates")
    {
        MetricRecord m = a;
        m.merge(b);
        REQUIRE(m.trial_count() == 3);
        REQUIRE(m.bit_errors() == 4);
        REQUIRE(m.bits() == 300);
        REQUIRE_THAT(m.ber(), WithinAbs(4.0 / 300.0, 1e-15));
        REQUIRE(m.rmsse_samples() == std::vector<double>{0.1, 0.2, 0.3, 0.05});
        REQUIRE_THAT(m.served_frac(), WithinAbs(0.5, 1e-15));
        REQUIRE_THAT(m.mean_rmsse(), WithinAbs(0.1625, 1e-15));
    }
    SECTION("merge order does not matter")
    {
        MetricRecord ab = a, ba = b;
        ab.merge(b);
        ba.merge(a);
        REQUIRE(ab.trials == ba.trials);
        REQUIRE(ab.ber() == ba.ber());
        REQUIRE(ab.rmsse_samples() == ba.rmsse_samples());
    }
    SECTION("duplicate trials are rejected")
    {
        MetricRecord m = a;
        REQUIRE_THROWS_AS(m.merge(a), std::logic_error);
    }
    SECTION("empty record")
    {
        MetricRecord m;
        REQUIRE(std::isnan(m.ber()));
        REQUIRE(std::isnan(m.served_frac()));
    }
}
