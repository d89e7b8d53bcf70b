// SPDX-License-Identifier: Apache-2.0
//
// pixelfas - reconfigurable pixel antenna state synthesis for fluid antenna systems
// Copyright (C) 2026 The pixelfas authors
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
#include "pixelfas/app/commands.hpp"
#include "pixelfas/app/oracle.hpp"

#include <CLI11.hpp>

#include <exception>
#include <functional>
#include <iostream>
#include <string>

namespace
{
    using pixelfas::app::CommandOptions;

    struct Overrides
    {
        std::uint64_t seed = 0;
        std::size_t threads = 0;
        std::uint64_t budget = 0;
        std::size_t target = 0;
    };

    void add_common(CLI::App *cmd, CommandOptions &opts, Overrides &ov, bool search_flags)
    {
        cmd->add_option("--config", opts.config_path, "configuration file")->required();
        cmd->add_option("--out", opts.out_dir, "existing output directory")->required();
        cmd->add_option("--seed", ov.seed, "master seed, overrides the config");
        cmd->add_option("--threads", ov.threads, "worker thread cap")->check(CLI::PositiveNumber);
        if (search_flags)
        {
            cmd->add_option("--budget", ov.budget, "maximum switch sets tried in step 1")->check(CLI::PositiveNumber);
            cmd->add_option("--target-matched-sets", ov.target, "stop step 1 after this many matched sets")
                ->check(CLI::PositiveNumber);
        }
    }

    void apply(CLI::App *cmd, CommandOptions &opts, const Overrides &ov)
    {
        if (cmd->count("--seed"))
            opts.seed = ov.seed;
        if (cmd->count("--threads"))
            opts.threads = ov.threads;
        if (cmd->get_option_no_throw("--budget") && cmd->count("--budget"))
            opts.budget = ov.budget;
        if (cmd->get_option_no_throw("--target-matched-sets") && cmd->count("--target-matched-sets"))
            opts.target_matched_sets = ov.target;
    }
}

int main(int argc, char **argv)
{
    namespace app = pixelfas::app;

    CLI::App cli{"Pixel antenna FAS designer: matched switch sets and FAS port ordering"};
    cli.require_subcommand(1);
    cli.set_version_flag("--version", app::tool_version());

    CommandOptions opts;
    Overrides ov;

    auto *synth = cli.add_subcommand("synth", "write a surrogate network and pattern bundle");
    add_common(synth, opts, ov, false);

    auto *search = cli.add_subcommand("search", "step 1: random search for matched switch sets");
    add_common(search, opts, ov, true);

    auto *order = cli.add_subcommand("order", "step 2: order the states of one switch set");
    add_common(order, opts, ov, false);
    order->add_option("--design", opts.design, "result.json supplying switch positions and hardwires")
        ->check(CLI::ExistingFile);

    auto *run = cli.add_subcommand("run", "two-step design: search then order");
    add_common(run, opts, ov, true);

    auto *eval = cli.add_subcommand("eval", "evaluate a given state table without searching");
    add_common(eval, opts, ov, false);
    eval->add_option("--state-table", opts.state_table, "state table CSV")->required()->check(CLI::ExistingFile);
    eval->add_option("--design", opts.design, "result.json supplying switch positions and hardwires")
        ->check(CLI::ExistingFile);

    auto *oracle = cli.add_subcommand("oracle", "run the built-in oracle suites");
    std::string level = "fast";
    bool perturb = false;
    oracle->add_option("--level", level, "fast or full")->check(CLI::IsMember({"fast", "full"}));
    oracle->add_flag("--perturb-kernel", perturb, "fault injection: corrupt one kernel entry")->group("");

    try
    {
        cli.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        const int code = cli.exit(e);
        return code == 0 ? app::exit_code::ok : app::exit_code::usage;
    }

    const std::function<int(const CommandOptions &, std::ostream &)> *chosen = nullptr;
    const std::function<int(const CommandOptions &, std::ostream &)> cmds[] = {
        app::cmd_synth, app::cmd_search, app::cmd_order, app::cmd_run, app::cmd_eval};
    CLI::App *subs[] = {synth, search, order, run, eval};
    for (std::size_t i = 0; i < 5; ++i)
        if (subs[i]->parsed())
        {
            apply(subs[i], opts, ov);
            chosen = &cmds[i];
        }

    try
    {
        if (oracle->parsed())
            return app::cmd_oracle({level == "full", perturb}, std::cout);
        return (*chosen)(opts, std::cerr);
    }
    catch (...)
    {
        return app::report_failure(std::current_exception(), std::cerr);
    }
}
