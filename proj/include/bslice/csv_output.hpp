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

#ifndef BSLICE_CSV_OUTPUT_HPP
#define BSLICE_CSV_OUTPUT_HPP

#include "bslice/sweep.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace bslice
{
    // Column names of the results CSV, in order.
    const std::vector<std::string> &results_csv_columns();

    // Header line followed by one row per sweep point (no trailing text after the last newline).
    std::string format_results_csv(const std::string &scenario, const std::vector<SweepRow> &rows, int trials);

    // Angles file: comment lines with config hash and seed, then one angle (radians) per line.
    std::string format_angles(const std::vector<double> &phis, const std::string &config_hash, std::uint64_t seed);

    // Trace CSV with columns step,ber,seed,config_hash.
    std::string format_trace_csv(const std::vector<double> &trace, const std::string &config_hash, std::uint64_t seed);

    /// Writes `content` to `<path>.tmp.<pid>` and renames it over `path`, so readers never
    /// observe a partially written file. Throws std::runtime_error on I/O failure.
    void write_file_atomic(const std::string &path, const std::string &content);
}

#endif
