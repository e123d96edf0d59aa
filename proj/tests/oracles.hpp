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

#ifndef BSLICE_TESTS_ORACLES_HPP
#define BSLICE_TESTS_ORACLES_HPP

// Independent reference computations used by the unit and acceptance tests. They
// deliberately avoid the library's closed-form expressions.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>

namespace oracle
{
    inline constexpr double pi = 3.14159265358979323846;

    inline double normal_pdf(double x) { return std::exp(-0.5 * x * x) / std::sqrt(2.0 * pi); }

    // Composite Simpson rule of f over [a, b] with n (even) subintervals.
    inline double simpson(const std::function<double(double)> &f, double a, double b, int n = 64)
    {
        const double h = (b - a) / n;
        double s = f(a) + f(b);
        for (int i = 1; i < n; ++i)
            s += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
        return s * h / 3.0;
    }

    // Midrise q-bit quantizer written directly from its cell description: 2^q cells of
    // width step centred on zero, reconstruction at the cell midpoint, outer cells open.
    inline double midrise(double x, int q, double step)
    {
        const double levels = std::ldexp(1.0, q);
        double k = std::floor(x / step);
        k = std::clamp(k, -levels / 2, levels / 2 - 1);
        return (k + 0.5) * step;
    }

    /// E[f(x, Q(x))] for x ~ N(0,1), integrated cell by cell (the integrand is smooth
    /// inside every cell), with the outer cells truncated at 12 standard deviations.
    inline double gaussian_cell_expectation(int q, double step, const std::function<double(double, double)> &f,
                                            int n_per_cell = 64)
    {
        const int half = 1 << (q - 1);
        const double tail = 12.0;
        double total = 0.0;
        for (int k = -half; k < half; ++k)
        {
            double a = k * step;
            double b = (k + 1) * step;
            // outer cells are open; integrate them far enough into the tail
            if (k == -half)
                a = std::min(-tail, b - tail);
            if (k == half - 1)
                b = std::max(tail, a + tail);
            const double level = (k + 0.5) * step;
            const int n = std::max(n_per_cell, 2 * (int)std::ceil((b - a) / 0.02));
            total += simpson([&](double x) { return f(x, level) * normal_pdf(x); }, a, b, n);
        }
        return total;
    }

    inline double quantizer_mse(int q, double step)
    {
        return gaussian_cell_expectation(q, step, [](double x, double y) { return (y - x) * (y - x); });
    }

    inline double bussgang_gain(int q, double step)
    {
        return gaussian_cell_expectation(q, step, [](double x, double y) { return x * y; });
    }

    inline double bussgang_distortion(int q, double step)
    {
        const double g = bussgang_gain(q, step);
        return gaussian_cell_expectation(q, step, [](double, double y) { return y * y; }) - g * g;
    }

    /// Brute-force MSE-optimal step: 1e-3 grid over (0, 3], then a 1e-4 grid over
    /// +/- 2e-3 around the coarse minimizer.
    inline double brute_force_step(int q)
    {
        double best = 1e-3, best_mse = quantizer_mse(q, best);
        for (int i = 2; i <= 3000; ++i)
        {
            const double s = i * 1e-3;
            const double m = quantizer_mse(q, s);
            if (m < best_mse)
            {
                best_mse = m;
                best = s;
            }
        }
        const double centre = best;
        for (int i = -20; i <= 20; ++i)
        {
            const double s = centre + i * 1e-4;
            if (s <= 0)
                continue;
            const double m = quantizer_mse(q, s);
            if (m < best_mse)
            {
                best_mse = m;
                best = s;
            }
        }
        return best;
    }

    // Reference equalizer via an explicit inverse:
    // (1/gamma) H^H (H H^H + (1/Es)(C + N0 I + 2 D gamma^-2 G^-2))^-1
    inline Eigen::MatrixXcd explicit_equalizer(const Eigen::MatrixXcd &H, const Eigen::MatrixXcd &C, double gamma,
                                               double D, const Eigen::VectorXd &g, double N0, double Es)
    {
        const Eigen::Index B = H.rows();
        Eigen::MatrixXcd A = H * H.adjoint();
        Eigen::MatrixXcd extra = N0 * Eigen::MatrixXcd::Identity(B, B);
        if (C.size() > 0)
            extra += C;
        for (Eigen::Index b = 0; b < B; ++b)
            extra(b, b) += 2.0 * D / (gamma * gamma * g[b] * g[b]);
        A += extra / Es;
        return H.adjoint() * A.inverse() / gamma;
    }
}

#endif
