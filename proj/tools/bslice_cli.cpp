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

#include "bslice/config.hpp"
#include "bslice/csv_output.hpp"
#include "bslice/rotation_learning.hpp"
#include "bslice/selftest.hpp"
#include "bslice/sweep.hpp"

#include <CLI11.hpp>
#include <spdlog/spdlog.h>

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace
{
    constexpr int exit_ok = 0;
    constexpr int exit_config_error = 2;
    constexpr int exit_runtime_error = 3;
    constexpr int exit_selftest_failure = 4;

    struct CommonOptions
    {
        std::string config;
        std::vector<std::string> overrides;
        std::string out;
        std::optional<int> workers;
        std::optional<std::uint64_t> seed;
    };

    void add_common(CLI::App *cmd, CommonOptions &opt, bool needs_config)
    {
        auto *c = cmd->add_option("--config", opt.config, "YAML config file");
        if (needs_config)
            c->required();
        cmd->add_option("--set", opt.overrides, "Override a config key (key=value, repeatable)");
        cmd->add_option("--out", opt.out, "Output path");
        cmd->add_option("--workers", opt.workers, "Worker threads")->check(CLI::PositiveNumber);
        cmd->add_option("--seed", opt.seed, "Base seed");
    }

    bslice::RunConfig load(const CommonOptions &opt)
    {
        auto overrides = opt.overrides;
        if (opt.workers)
            overrides.push_back("workers=" + std::to_string(*opt.workers));
        if (opt.seed)
            overrides.push_back("seed=" + std::to_string(*opt.seed));
        if (!opt.out.empty())
            overrides.push_back("out=\"" + opt.out + "\"");
        return bslice::load_run_config(opt.config, overrides);
    }

    int write_results(const bslice::RunConfig &cfg, const std::vector<bslice::SweepRow> &rows,
                      const std::string &fallback_out)
    {
        const std::string out = cfg.out.empty() ? fallback_out : cfg.out;
        bslice::write_file_atomic(out, bslice::format_results_csv(cfg.sweep.scenario, rows, cfg.sweep.trials));
        int failed = 0;
        for (const auto &row : rows)
            if (row.record.failure)
                ++failed;
        spdlog::info("wrote {} rows to {}", rows.size(), out);
        if (failed > 0)
        {
            spdlog::error("{} of {} points failed", failed, rows.size());
            return exit_runtime_error;
        }
        return exit_ok;
    }

    int cmd_run(const CommonOptions &opt)
    {
        const auto cfg = load(opt);
        (void)cfg.single_point(); // rejects multi-valued grids
        return write_results(cfg, bslice::run_sweep(cfg.sweep), "run.csv");
    }

    int cmd_sweep(const CommonOptions &opt)
    {
        const auto cfg = load(opt);
        return write_results(cfg, bslice::run_sweep(cfg.sweep), "sweep.csv");
    }

    int cmd_learn(const CommonOptions &opt)
    {
        const auto cfg = load(opt);
        const auto base = cfg.single_point();
        const auto fc = bslice::learning_frame_config(base, cfg.learn);
        const std::uint64_t seed = cfg.sweep.base_seed;
        const std::string hash = bslice::learning_config_hash(cfg.learn, base);
        const std::string prefix = cfg.out.empty() ? "rotations" : cfg.out;

        spdlog::info("drawing {} training channels", cfg.learn.train_channels);
        const auto train = bslice::make_training_set(fc, cfg.learn.train_channels, bslice::derive_seed(seed, 0));
        const auto res = bslice::learn_rotations(cfg.learn, base, train);

        bslice::write_file_atomic(prefix + "_angles.txt", bslice::format_angles(res.phis, hash, seed));
        bslice::write_file_atomic(prefix + "_trace.csv", bslice::format_trace_csv(res.trace, hash, seed));
        spdlog::info("training BER: uniform {:.6f}, learned {:.6f}", res.trace.front(), res.trace.back());

        if (cfg.eval_channels > 0)
        {
            const auto eval = bslice::make_training_set(fc, cfg.eval_channels, bslice::derive_seed(seed, 1));
            const bslice::FramePipeline pipeline(fc);
            const int C = fc.scenario.B / fc.slicer.S;
            const double uniform = bslice::training_ber(pipeline, bslice::default_rotations(fc.scenario.B, C), eval);
            const double learned = bslice::training_ber(pipeline, res.phis, eval);
            char buf[256];
            std::snprintf(buf, sizeof buf, "rotations,ber,seed,config_hash\nuniform,%.17g,%llu,%s\nlearned,%.17g,%llu,%s\n",
                          uniform, (unsigned long long)seed, hash.c_str(), learned, (unsigned long long)seed,
                          hash.c_str());
            bslice::write_file_atomic(prefix + "_eval.csv", buf);
            spdlog::info("evaluation BER: uniform {:.6f}, learned {:.6f}", uniform, learned);
        }
        return exit_ok;
    }

    int cmd_quantizer_table()
    {
        std::printf("q,step,gamma,D\n");
        for (int q = bslice::min_quantizer_bits; q <= bslice::max_quantizer_bits; ++q)
        {
            const auto spec = bslice::QuantizerSpec::with_bits(q);
            std::printf("%d,%.10f,%.10f,%.10e\n", q, spec.step, spec.gain, spec.distortion);
        }
        return exit_ok;
    }

    int cmd_selftest()
    {
        bool ok = true;
        for (const auto &r : bslice::run_selftests())
        {
            std::printf("[%s] %s (%s)\n", r.passed ? "PASS" : "FAIL", r.name.c_str(), r.detail.c_str());
            ok = ok && r.passed;
        }
        return ok ? exit_ok : exit_selftest_failure;
    }
}

int main(int argc, char **argv)
{
    CLI::App app{"Beam-slicing jammer mitigation simulator for quantized massive MU-MIMO"};
    app.require_subcommand(1);

    CommonOptions run_opt, sweep_opt, learn_opt;
    auto *run = app.add_subcommand("run", "Simulate a single operating point and write a CSV row");
    add_common(run, run_opt, true);
    auto *sweep = app.add_subcommand("sweep", "Simulate a parameter grid and write one CSV row per point");
    add_common(sweep, sweep_opt, true);
    auto *learn = app.add_subcommand("learn-rotations", "Learn per-cluster rotations by coordinate descent");
    add_common(learn, learn_opt, true);
    auto *qtable = app.add_subcommand("quantizer-table", "Print step size and Bussgang constants for q = 1..12");
    auto *selftest = app.add_subcommand("selftest", "Run built-in invariant checks");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp &e)
    {
        return app.exit(e);
    }
    catch (const CLI::ParseError &e)
    {
        app.exit(e);
        return exit_config_error;
    }

    try
    {
        if (run->parsed())
            return cmd_run(run_opt);
        if (sweep->parsed())
            return cmd_sweep(sweep_opt);
        if (learn->parsed())
            return cmd_learn(learn_opt);
        if (qtable->parsed())
            return cmd_quantizer_table();
        if (selftest->parsed())
            return cmd_selftest();
    }
    catch (const bslice::ConfigError &e)
    {
        std::cerr << "config error: " << e.what() << "\n";
        return exit_config_error;
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return exit_runtime_error;
    }
    return exit_runtime_error;
}
