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

#include <spdlog/spdlog.h>

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace bslice
{
    namespace
    {
        void check_bits(int q)
        {
            if (q < min_quantizer_bits || q > max_quantizer_bits)
                throw std::invalid_argument("quantizer resolution must lie in [1, 12] bits, got " + std::to_string(q));
        }

        double normal_pdf(double x)
        {
            if (std::isinf(x))
                return 0.0;
            return std::exp(-0.5 * x * x) / std::sqrt(2.0 * pi);
        }

        double normal_cdf(double x)
        {
            return 0.5 * std::erfc(-x / std::sqrt(2.0));
        }

        // Partial moments of N(0,1) over the cells of a midrise quantizer, accumulated
        // against the cell's reconstruction level l_k.
        struct CellMoments
        {
            double e_q2 = 0.0; // sum l^2 P(cell)
            double e_qx = 0.0; // sum l E[x; cell]
        };

        CellMoments cell_moments(int q, double step)
        {
            const long half = 1L << (q - 1);
            CellMoments m;
            for (long k = -half; k < half; ++k)
            {
                const double lo = k == -half ? -std::numeric_limits<double>::infinity() : step * k;
                const double hi = k == half - 1 ? std::numeric_limits<double>::infinity() : step * (k + 1);
                const double level = step * (k + 0.5);
                const double p = normal_cdf(hi) - normal_cdf(lo);
                const double first = normal_pdf(lo) - normal_pdf(hi);
                m.e_q2 += level * level * p;
                m.e_qx += level * first;
            }
            return m;
        }
    }

    QuantizerSpec QuantizerSpec::infinite()
    {
        return QuantizerSpec{std::nullopt, 0.0, 1.0, 0.0};
    }

    QuantizerSpec QuantizerSpec::with_bits(int q)
    {
        const double step = optimal_step_size(q);
        const auto bc = bussgang_constants(q, step);
        return QuantizerSpec{q, step, bc.gain, bc.distortion};
    }

    std::string resolution_to_string(const std::optional<int> &bits)
    {
        return bits ? std::to_string(*bits) : "inf";
    }

    std::optional<int> parse_resolution(const std::string &text)
    {
        if (text == "inf")
            return std::nullopt;
        std::size_t used = 0;
        int q = 0;
        try
        {
            q = std::stoi(text, &used);
        }
        catch (const std::exception &)
        {
            used = 0;
        }
        if (used != text.size() || used == 0)
            throw std::invalid_argument("invalid ADC resolution '" + text + "' (expected inf or 1..12)");
        check_bits(q);
        return q;
    }

    double quantize_scalar(double x, int q, double step)
    {
        const double limit = step * std::ldexp(1.0, q - 1);
        if (std::abs(x) < limit)
            return step * std::floor(x / step) + step / 2.0;
        const double top = step / 2.0 * (std::ldexp(1.0, q) - 1.0);
        return x > 0.0 ? top : -top;
    }

    double quantize_scalar(double x, const QuantizerSpec &spec)
    {
        if (spec.is_infinite())
            return x;
        return quantize_scalar(x, *spec.bits, spec.step);
    }

    double quantization_mse(int q, double step)
    {
        check_bits(q);
        if (!(step > 0.0))
            throw std::invalid_argument("quantization_mse: step must be positive");
        const auto m = cell_moments(q, step);
        return m.e_q2 - 2.0 * m.e_qx + 1.0;
    }

    double minimize_step_size(int q, double tol)
    {
        check_bits(q);
        // The MSE is unimodal in the step size; search over log(step) so that the
        // same relative accuracy holds for 1 and 12 bits.
        double a = std::log(1e-5);
        double b = std::log(4.0);
        const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
        double c = b - inv_phi * (b - a);
        double d = a + inv_phi * (b - a);
        double fc = quantization_mse(q, std::exp(c));
        double fd = quantization_mse(q, std::exp(d));
        while (b - a > tol)
        {
            if (fc < fd)
            {
                b = d;
                d = c;
                fd = fc;
                c = b - inv_phi * (b - a);
                fc = quantization_mse(q, std::exp(c));
            }
            else
            {
                a = c;
                c = d;
                fc = fd;
                d = a + inv_phi * (b - a);
                fd = quantization_mse(q, std::exp(d));
            }
        }
        return std::exp(0.5 * (a + b));
    }

    double optimal_step_size(int q)
    {
        check_bits(q);
        static const std::array<double, max_quantizer_bits + 1> table = []
        {
            std::array<double, max_quantizer_bits + 1> t{};
            for (int bits = min_quantizer_bits; bits <= max_quantizer_bits; ++bits)
                t[bits] = minimize_step_size(bits);
            return t;
        }();
        return table[q];
    }

    BussgangConstants bussgang_constants(int q, double step)
    {
        check_bits(q);
        if (!(step > 0.0))
            throw std::invalid_argument("bussgang_constants: step must be positive");
        const auto m = cell_moments(q, step);
        return {m.e_qx, m.e_q2 - m.e_qx * m.e_qx};
    }

    namespace
    {
        GainMatrix gains_impl(const CMatrix &Y, std::optional<double> cap)
        {
            if (Y.cols() < 1)
                throw std::invalid_argument("learn_gains: need at least one training vector");
            const double two_t = 2.0 * (double)Y.cols();
            GainMatrix G{RVector(Y.rows())};
            for (Eigen::Index b = 0; b < Y.rows(); ++b)
            {
                const double energy = Y.row(b).squaredNorm();
                if (energy > 0.0)
                {
                    G.g[b] = std::sqrt(two_t / energy);
                    continue;
                }
                if (!cap)
                    throw std::domain_error("learn_gains: beam " + std::to_string(b) + " has zero training energy");
                spdlog::warn("learn_gains: beam {} has zero training energy, using gain cap {}", b, *cap);
                G.g[b] = *cap;
            }
            return G;
        }
    }

    GainMatrix learn_gains(const CMatrix &Y)
    {
        return gains_impl(Y, std::nullopt);
    }

    GainMatrix learn_gains(const CMatrix &Y, double cap)
    {
        if (!(cap > 0.0))
            throw std::invalid_argument("learn_gains: gain cap must be positive");
        return gains_impl(Y, cap);
    }

    CMatrix compquant(const CMatrix &Y, const GainMatrix &G, const QuantizerSpec &spec)
    {
        if (spec.is_infinite())
            return Y;
        if (G.g.size() != Y.rows())
            throw std::invalid_argument("compquant: gain vector does not match the number of beams");
        const int q = *spec.bits;
        CMatrix R(Y.rows(), Y.cols());
        for (Eigen::Index t = 0; t < Y.cols(); ++t)
            for (Eigen::Index b = 0; b < Y.rows(); ++b)
            {
                const double g = G.g[b];
                const cplx v = g * Y(b, t);
                R(b, t) = cplx(quantize_scalar(v.real(), q, spec.step), quantize_scalar(v.imag(), q, spec.step)) / g;
            }
        return R;
    }

    CVector compquant(const CVector &y, const GainMatrix &G, const QuantizerSpec &spec)
    {
        return compquant(CMatrix(y), G, spec).col(0);
    }
}
