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
#ifndef PIXELFAS_IMPM_CONFIGURATION_HPP
#define PIXELFAS_IMPM_CONFIGURATION_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace pixelfas::impm
{
    // Terminations of the Q internal ports: a hardwire bit per port (1 = connected, 0 = open) and a
    // set of switch positions whose state bits override the hardwire bits there.
    struct PixelConfiguration
    {
        std::vector<std::uint8_t> hardwire;       // x, one entry per internal port
        std::vector<std::size_t> switch_positions; // S, 1-based internal port indices
        std::vector<std::uint8_t> switch_bits;     // one per switch position, 1 = on

        std::size_t internal_ports() const { return hardwire.size(); }
        std::size_t switch_count() const { return switch_positions.size(); }

        // Throws InvalidArgument unless |S| < Q, S distinct and in 1..Q, all bits in {0, 1}.
        void validate() const;

        // Same hardwire vector and switch set, switch bits taken from the low P bits of `state`
        // (bit p of state drives switch_positions[p]).
        PixelConfiguration with_state(std::uint64_t state) const;

        // Index of the current switch bits in the encoding used by with_state.
        std::uint64_t state_index() const;

        // Short human-readable identifier used in error messages.
        std::string id() const;

        bool operator==(const PixelConfiguration &) const = default;
    };
}

#endif
