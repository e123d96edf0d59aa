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

#include "bslice/quantizer.hpp"

#include "oracles.hpp"

#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

using namespace bslice;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("one-bit step size has the closed form 2 sqrt(2/pi)", "[quantizer]")
{
    REQUIRE_THAT(optimal_step_size(1), WithinAbs(2.0 * std::sqrt(2.0 / pi), 1e-6));
}

TEST_CASE("optimal step size matches a brute-force grid search", "[quantizer]")
{
    for (int q = 1; q <= 4; ++q)
    {
        INFO("q = " << q);
        REQUIRE_THAT(optimal_step_size(q), WithinAbs(oracle::brute_force_step(q), 1e-3));
    }
}

TEST_CASE("optimal step size is a local minimum of the MSE", "[quantizer]")
{
    for (int q = 1; q <= 8; ++q)
    {
        INFO("q = " << q);
        const double s = optimal_step_size(q);
        const double m = quantization_mse(q, s);
        REQUIRE(m <= quantization_mse(q, s + 0.01));
        if (s > 0.01)
            REQUIRE(m <= quantization_mse(q, s - 0.01));
    }
}

TEST_CASE("closed-form MSE agrees with cell-wise numerical integration", "[quantizer]")
{
    for (int q : {1, 2, 3, 5, 8})
        for (double step : {0.05, 0.3, 1.0, 2.0})
        {
            INFO("q = " << q << ", step = " << step);
            REQUIRE_THAT(quantization_mse(q, step), WithinAbs(oracle::quantizer_mse(q, step), 1e-9));
        }
}

TEST_CASE("step sizes decrease with resolution", "[quantizer]")
{
    for (int q = 2; q <= max_quantizer_bits; ++q)
        REQUIRE(optimal_step_size(q) < optimal_step_size(q - 1));
    REQUIRE_THROWS_AS(optimal_step_size(0), std::invalid_argument);
    REQUIRE_THROWS_AS(optimal_step_size(13), std::invalid_argument);
}

TEST_CASE("midrise quantizer cell rule", "[quantizer]")
{
    const double step2 = optimal_step_size(2);
    REQUIRE_THAT(step2, WithinAbs(0.9957, 1e-4));

    SECTION("zero maps to half a step")
    {
        REQUIRE(quantize_scalar(0.0, 2, step2) == step2 / 2);
    }
    SECTION("saturation for large inputs")
    {
        REQUIRE(quantize_scalar(1e10, 2, step2) == step2 / 2 * 3);
        REQUIRE(quantize_scalar(-1e10, 2, step2) == -step2 / 2 * 3);
    }
    SECTION("0.5 lies in the first positive cell")
    {
        REQUIRE_THAT(quantize_scalar(0.5, 2, 0.9957), WithinAbs(0.49785, 1e-12));
    }
    SECTION("agrees with an independent cell description")
    {
        std::mt19937_64 rng(3);
        std::normal_distribution<double> nd(0.0, 2.0);
        for (int q : {1, 3, 4, 8})
        {
            const double s = optimal_step_size(q);
            for (int i = 0; i < 2000; ++i)
            {
                const double x = nd(rng);
                REQUIRE_THAT(quantize_scalar(x, q, s), WithinAbs(oracle::midrise(x, q, s), 1e-12));
            }
        }
    }
    SECTION("outputs are the 2^q reconstruction levels")
    {
        for (int q : {1, 2, 3})
        {
            const double s = optimal_step_size(q);
            for (double x = -5; x <= 5; x += 0.01)
            {
                const double y = quantize_scalar(x, q, s);
                const double k = y / s - 0.5;
                REQUIRE_THAT(k, WithinAbs(std::round(k), 1e-9));
                REQUIRE(std::abs(y) <= s / 2 * (std::ldexp(1.0, q) - 1) + 1e-12);
            }
        }
    }
}

TEST_CASE("Bussgang constants", "[quantizer]")
{
    const double s1 = optimal_step_size(1);
    const auto b1 = bussgang_constants(1, s1);
    REQUIRE_THAT(b1.gain, WithinAbs(2.0 / pi, 1e-6));
    REQUIRE_THAT(b1.distortion, WithinAbs((2.0 / pi) * (1.0 - 2.0 / pi), 1e-6));

    for (int q = 1; q <= 8; ++q)
    {
        INFO("q = " << q);
        const double s = optimal_step_size(q);
        const auto bc = bussgang_constants(q, s);
        REQUIRE_THAT(bc.gain, WithinAbs(oracle::bussgang_gain(q, s), 1e-9));
        REQUIRE_THAT(bc.distortion, WithinAbs(oracle::bussgang_distortion(q, s), 1e-9));
        // at the MSE optimum the quantizer is unbiased in the sense E[Q x] = E[Q^2]
        REQUIRE_THAT(bc.distortion, WithinAbs(bc.gain * (1 - bc.gain), 1e-6));
    }
    const auto b8 = bussgang_constants(8, optimal_step_size(8));
    REQUIRE(b8.gain >= 0.999);
    REQUIRE(b8.distortion <= 1e-3);
}

TEST_CASE("QuantizerSpec and resolution strings", "[quantizer]")
{
    const auto inf = QuantizerSpec::infinite();
    REQUIRE(inf.is_infinite());
    REQUIRE(inf.gain == 1.0);
    REQUIRE(inf.distortion == 0.0);
    REQUIRE(quantize_scalar(0.123, inf) == 0.123);

    const auto q4 = QuantizerSpec::with_bits(4);
    REQUIRE(q4.bits == 4);
    REQUIRE(q4.step == optimal_step_size(4));

    REQUIRE(resolution_to_string(std::nullopt) == "inf");
    REQUIRE(resolution_to_string(4) == "4");
    REQUIRE(parse_resolution("inf") == std::nullopt);
    REQUIRE(parse_resolution("12") == 12);
    REQUIRE_THROWS_AS(parse_resolution("0"), std::invalid_argument);
    REQUIRE_THROWS_AS(parse_resolution("4b"), std::invalid_argument);
    REQUIRE_THROWS_AS(parse_resolution(""), std::invalid_argument);
}

TEST_CASE("gain control", "[quantizer]")
{
    const int T = 6;
    SECTION("unit-modulus entries 1+i give gain 1")
    {
        CMatrix Y = CMatrix::Constant(1, T, cplx(1, 1));
        REQUIRE_THAT(learn_gains(Y).g[0], WithinAbs(1.0, 1e-15));
    }
    SECTION("entries 2 give gain 1/sqrt(2)")
    {
        CMatrix Y = CMatrix::Constant(1, T, cplx(2, 0));
        REQUIRE_THAT(learn_gains(Y).g[0], WithinAbs(1.0 / std::sqrt(2.0), 1e-15));
    }
    SECTION("gain is inversely proportional to the row scale")
    {
        std::mt19937_64 rng(5);
        const CMatrix Y = complex_normal_matrix(rng, 4, T, 1.0);
        const auto g1 = learn_gains(Y);
        const auto g2 = learn_gains(Y * 3.5);
        for (int b = 0; b < 4; ++b)
            REQUIRE_THAT(g2.g[b], WithinRel(g1.g[b] / 3.5, 1e-13));
    }
    SECTION("zero rows")
    {
        CMatrix Y = CMatrix::Zero(2, T);
        Y(0, 0) = 1.0;
        REQUIRE_THROWS_AS(learn_gains(Y), std::domain_error);
        const auto G = learn_gains(Y, 1e6);
        REQUIRE(G.g[1] == 1e6);
        REQUIRE_THROWS_AS(learn_gains(Y, 0.0), std::invalid_argument);
    }
}

TEST_CASE("compquant", "[quantizer]")
{
    std::mt19937_64 rng(11);
    const CMatrix Y = complex_normal_matrix(rng, 8, 5, 1.0);
    const auto G = learn_gains(Y);

    SECTION("infinite resolution is the identity")
    {
        REQUIRE(compquant(Y, G, QuantizerSpec::infinite()) == Y);
    }
    SECTION("real input with unit gains")
    {
        const auto spec = QuantizerSpec::with_bits(3);
        GainMatrix I{RVector::Ones(8)};
        const CMatrix R = compquant(CMatrix(Y.real().cast<cplx>()), I, spec);
        for (Eigen::Index i = 0; i < R.size(); ++i)
        {
            REQUIRE(R(i).real() == quantize_scalar(Y(i).real(), spec));
            REQUIRE(R(i).imag() == spec.step / 2);
        }
    }
    SECTION("scaling relation G^-1 compquant(G y, I)")
    {
        const auto spec = QuantizerSpec::with_bits(4);
        GainMatrix I{RVector::Ones(8)};
        const CMatrix direct = compquant(Y, G, spec);
        const CMatrix via = G.g.cast<cplx>().cwiseInverse().asDiagonal() * compquant(CMatrix(G.g.cast<cplx>().asDiagonal() * Y), I, spec);
        REQUIRE((direct - via).cwiseAbs().maxCoeff() < 1e-12);
    }
    SECTION("vector overload matches the matrix version")
    {
        const auto spec = QuantizerSpec::with_bits(2);
        const CVector y = Y.col(2);
        REQUIRE(compquant(y, G, spec) == compquant(Y, G, spec).col(2));
    }
    SECTION("mismatched gains are rejected")
    {
        GainMatrix bad{RVector::Ones(3)};
        REQUIRE_THROWS_AS(compquant(Y, bad, QuantizerSpec::with_bits(4)), std::invalid_argument);
    }
}
