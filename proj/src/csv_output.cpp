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

#include "bslice/csv_output.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unistd.h>

namespace bslice
{
    namespace
    {
        std::string num(double v)
        {
            if (std::isinf(v))
                return v < 0 ? "-inf" : "inf";
            if (std::isnan(v))
                return "nan";
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.10g", v);
            return buf;
        }

        // "dft" for uniformly-strided rotations, otherwise e.g. "dft+none".
        std::string transform_label(const SlicerParams &s)
        {
            std::string label = to_string(s.transform);
            if (s.rotations != RotationMode::Uniform)
                label += "+" + to_string(s.rotations);
            return label;
        }
    }

    const std::vector<std::string> &results_csv_columns()
    {
        static const std::vector<std::string> cols = {
            "scenario", "method", "domain", "channel", "transform", "S", "q", "rho_db", "snr_db", "trials", "ber",
            "ber_ci_lo", "ber_ci_hi", "served_frac", "mean_rmsse", "seed", "config_hash"};
        return cols;
    }

    std::string format_results_csv(const std::string &scenario, const std::vector<SweepRow> &rows, int trials)
    {
        std::ostringstream os;
        const auto &cols = results_csv_columns();
        for (std::size_t i = 0; i < cols.size(); ++i)
            os << (i ? "," : "") << cols[i];
        os << "\n";
        for (const auto &row : rows)
        {
            const auto &cfg = row.point.cfg;
            const auto &rec = row.record;
            const bool ok = !rec.failure && rec.trial_count() > 0;
            const auto ci = ok ? rec.ber_ci() : ConfidenceInterval{NAN, NAN};
            os << scenario << "," << to_string(cfg.detector.kind) << "," << to_string(cfg.detector.domain) << ","
               << to_string(cfg.scenario.channel) << "," << transform_label(cfg.slicer) << "," << cfg.slicer.S << ","
               << resolution_to_string(cfg.detector.adc) << "," << num(cfg.rho_db) << "," << num(cfg.snr_db) << ","
               << trials << "," << num(ok ? rec.ber() : NAN) << "," << num(ci.lo) << "," << num(ci.hi) << ","
               << num(ok ? rec.served_frac() : NAN) << "," << num(ok ? rec.mean_rmsse() : NAN) << "," << rec.seed
               << "," << rec.config_hash << "\n";
        }
        return os.str();
    }

    std::string format_angles(const std::vector<double> &phis, const std::string &config_hash, std::uint64_t seed)
    {
        std::ostringstream os;
        os << "# config_hash=" << config_hash << "\n# seed=" << seed << "\n";
        for (double phi : phis)
        {
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.17g", phi);
            os << buf << "\n";
        }
        return os.str();
    }

    std::string format_trace_csv(const std::vector<double> &trace, const std::string &config_hash, std::uint64_t seed)
    {
        std::ostringstream os;
        os << "step,ber,seed,config_hash\n";
        for (std::size_t i = 0; i < trace.size(); ++i)
        {
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.17g", trace[i]);
            os << i << "," << buf << "," << seed << "," << config_hash << "\n";
        }
        return os.str();
    }

    void write_file_atomic(const std::string &path, const std::string &content)
    {
        const std::string tmp = path + ".tmp." + std::to_string(::getpid());
        {
            std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
            if (!out)
                throw std::runtime_error("cannot open '" + tmp + "' for writing");
            out << content;
            out.flush();
            if (!out)
            {
                std::remove(tmp.c_str());
                throw std::runtime_error("failed writing '" + tmp + "'");
            }
        }
        std::error_code ec;
        std::filesystem::rename(tmp, path, ec);
        if (ec)
        {
            std::remove(tmp.c_str());
            throw std::runtime_error("cannot rename '" + tmp + "' to '" + path + "': " + ec.message());
        }
    }
}
