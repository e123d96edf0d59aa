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

#ifndef BSLICE_SELFTEST_HPP
#define BSLICE_SELFTEST_HPP

#include <string>
#include <vector>

namespace bslice
{
    struct SelftestResult
    {
        std::string name;
        bool passed = false;
        std::string detail;
    };

    /// Fast built-in invariant checks:
    ///  - noiseless, unquantized jammer training yields the exact orthogonal-complement projector
    ///  - S = 1 beam-slicing reproduces the antenna-domain pipeline
    ///  - 1-bit quantizer step size and Bussgang constants match their closed forms
    ///  - Bussgang distortion is uncorrelated with the input (Monte-Carlo)
    std::vector<SelftestResult> run_selftests();
}

#endif
