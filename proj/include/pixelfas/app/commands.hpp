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
#ifndef PIXELFAS_APP_COMMANDS_HPP
#define PIXELFAS_APP_COMMANDS_HPP

#include "pixelfas/app/config.hpp"
#include "pixelfas/search/matched.hpp"

#include <cstdint>
#include <exception>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

namespace pixelfas::app
{
    namespace exit_code
    {
        inline constexpr int ok = 0;
        inline constexpr int internal = 1;    // unexpected failure, I/O
        inline constexpr int usage = 2;       // bad flags or configuration
        inline constexpr int parse = 3;       // malformed input file
        inline constexpr int numeric = 4;     // singular system, zero-energy state
        inline constexpr int no_solution = 5; // step 1 found no matched set
        inline constexpr int oracle = 6;      // an oracle suite failed
    }

    // Command-line values that override the configuration file.
    struct CommandOptions
    {
        std::filesystem::path config_path;
        std::filesystem::path out_dir;
        std::optional<std::uint64_t> seed;
        std::optional<std::size_t> threads;
        std::optional<std::uint64_t> budget;
        std::optional<std::size_t> target_matched_sets;
        std::filesystem::path state_table; // eval
        std::filesystem::path design;      // eval / order: result.json supplying the switch set and hardwires
    };

    RunConfig resolve_config(const CommandOptions &options);

    // Network, patterns and switch model at the design frequencies.
    search::Problem build_problem(const RunConfig &config);

    int cmd_synth(const CommandOptions &options, std::ostream &log);
    int cmd_search(const CommandOptions &options, std::ostream &log);
    int cmd_order(const CommandOptions &options, std::ostream &log);
    int cmd_run(const CommandOptions &options, std::ostream &log);
    int cmd_eval(const CommandOptions &options, std::ostream &log);

    // Maps an exception to its exit code and prints it.
    int report_failure(std::exception_ptr error, std::ostream &err);

    // Version string written into manifests.
    std::string tool_version();
}

#endif
