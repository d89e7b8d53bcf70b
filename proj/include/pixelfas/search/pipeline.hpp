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
#ifndef PIXELFAS_SEARCH_PIPELINE_HPP
#define PIXELFAS_SEARCH_PIPELINE_HPP

#include "pixelfas/pcdm/covariance.hpp"
#include "pixelfas/search/matched.hpp"
#include "pixelfas/search/ordering.hpp"

#include <memory>
#include <vector>

namespace pixelfas::search
{
    struct PipelineParams
    {
        SearchParams search;
        GAParams ga;
        double aperture_wavelengths = 0.5; // W
        std::size_t baseline_samples = 100;  // random orderings for the baseline mean
    };

    struct SetResult
    {
        std::uint64_t candidate_index = 0;
        std::size_t m = 0;
        PortOrdering ordering;
        double error = 0.0;
        std::uint64_t evaluations = 0;
    };

    struct RunResult
    {
        bool no_solution = false;
        SearchStats stats;
        std::vector<SetResult> per_set;

        // Best set (meaningless when no_solution)
        std::size_t best_set = 0; // index into per_set
        MatchedSet best;
        PortOrdering ordering;
        double error = 0.0;
        std::vector<double> best_trace;
        std::vector<pcdm::CovarianceMatrix> covariance;  // M x M per frequency
        std::vector<numerics::RealMatrix> selected;      // N x N per frequency, ordered by D
        pcdm::TargetCovariance target;
        double baseline_mean_error = 0.0;              // mean over random orderings of the best set

        // Switch bits of the state behind FAS port n (row n - 1), one column per switch position.
        std::vector<std::vector<std::uint8_t>> state_table() const;
    };

    // Magnitude covariance of the given member states, one matrix per frequency.
    std::vector<pcdm::CovarianceMatrix> state_covariance(const pcdm::PatternKernel &kernel,
                                                         const std::vector<StateResponse> &members);

    // Mean error of uniformly random valid orderings.
    double random_baseline(std::size_t m, const Evaluator &evaluator, std::size_t n, std::size_t samples,
                           std::uint64_t seed);

    // Step 1 then Step 2 on every matched set; the global best has the lowest error, ties going
    // to the set found first.
    RunResult two_step_pipeline(const Problem &problem, const PipelineParams &params);

    // Step 2 on a single given switch set and hardwire vector: every state is evaluated and the
    // matched ones are ordered. Flags no_solution when fewer than N states match.
    RunResult order_state_set(const Problem &problem, const StateSet &set, const PipelineParams &params);

    // Step 2 alone on injected states: current vectors (ports x M) per frequency against a kernel.
    RunResult order_injected_states(const pcdm::PatternKernel &kernel, const std::vector<numerics::ComplexMatrix> &currents,
                                    const PipelineParams &params);
}

#endif
