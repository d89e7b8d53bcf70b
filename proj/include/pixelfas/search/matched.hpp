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
#ifndef PIXELFAS_SEARCH_MATCHED_HPP
#define PIXELFAS_SEARCH_MATCHED_HPP

#include "pixelfas/em/network.hpp"
#include "pixelfas/em/pattern.hpp"
#include "pixelfas/impm/circuit.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace pixelfas::search
{
    using numerics::complex;

    // Everything a configuration is evaluated against. Network and patterns hold exactly the
    // design frequency samples, in the same order.
    struct Problem
    {
        em::MultiportNetwork network;
        em::PatternGrid patterns;
        impm::SwitchModel switch_model;
        double z0_ohm = 50.0;
        em::PowerAngularSpectrum pas;

        // Throws InvalidArgument when ports or frequencies of network and patterns disagree.
        void validate() const;
        std::size_t internal_ports() const { return network.internal_ports(); }
    };

    // Reflection threshold of a matched state, dB. A state is matched when its worst reflection
    // over all frequency samples lies strictly below it.
    inline constexpr double matched_threshold_db = -10.0;

    // A switch set with a hardwire vector: the 2^P configurations that differ only in switch bits.
    struct StateSet
    {
        std::vector<std::size_t> switch_positions; // ascending, 1-based
        std::vector<std::uint8_t> hardwire;        // entries at switch positions are 0

        std::uint64_t state_count() const { return std::uint64_t(1) << switch_positions.size(); }
        impm::PixelConfiguration state(std::uint64_t index) const;
        bool operator==(const StateSet &) const = default;
    };

    // Evaluation of one state at every frequency sample.
    struct StateResponse
    {
        std::uint64_t state_index = 0;
        std::vector<complex> z_in;
        std::vector<double> reflection_db;
        std::vector<std::vector<complex>> currents; // per frequency, Q + 1 entries
        double worst_reflection_db = 0.0;
        bool singular = false;

        bool matched() const { return !singular && worst_reflection_db < matched_threshold_db; }
    };

    // Solves one configuration at every frequency. A singular reduced system marks the response
    // singular instead of throwing. With stop_when_unmatched, evaluation ends at the first
    // frequency where the state fails the match threshold.
    StateResponse evaluate_state(const Problem &problem, const impm::PixelConfiguration &config,
                                 bool stop_when_unmatched = false);

    struct MatchedSet
    {
        StateSet parent;
        std::uint64_t candidate_index = 0; // position in the sampling sequence, 0-based
        std::vector<StateResponse> members; // ascending state index

        std::size_t m() const { return members.size(); }
    };

    struct SearchParams
    {
        std::size_t switches = 6;        // P
        std::size_t ports = 12;          // N, minimum members of a matched set
        std::uint64_t budget = 100000;   // distinct candidate sets to try
        std::size_t target = 100;        // matched sets wanted
        std::uint64_t seed = 1;
        std::size_t threads = 1;
        std::size_t batch = 32;          // candidates evaluated together; fixed so results ignore threads
    };

    struct SearchStats
    {
        std::uint64_t sets_tried = 0;
        std::uint64_t states_evaluated = 0;
        std::uint64_t singular_states = 0;
        std::uint64_t duplicate_draws = 0;
        std::optional<double> best_reflection_db; // over every evaluated state
        std::size_t largest_matched_count = 0;    // most matched states in any candidate
    };

    struct SearchResult
    {
        std::vector<MatchedSet> sets;
        SearchStats stats;

        bool exhausted() const { return sets.empty(); }
    };

    // Step 1: random sampling of (switch set, hardwire vector) pairs. Switch sets are uniform over
    // P-subsets, hardwire bits independent fair coins, repeated draws skipped. Stops after `target`
    // matched sets or `budget` distinct candidates. Deterministic in seed, independent of threads.
    SearchResult random_matched_search(const Problem &problem, const SearchParams &params);

    // Draws the candidate sequence used by random_matched_search, for inspection and tests.
    std::vector<StateSet> sample_candidates(std::size_t q, const SearchParams &params, std::size_t count);
}

#endif
