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
#ifndef PIXELFAS_SEARCH_ORDERING_HPP
#define PIXELFAS_SEARCH_ORDERING_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace pixelfas::search
{
    // D: entry n (FAS port n + 1) holds the 1-based state index assigned to that port.
    using PortOrdering = std::vector<std::size_t>;

    // B: N genes in 1..M, repeats allowed; turned into a PortOrdering by decode().
    using Chromosome = std::vector<std::size_t>;

    // Error of an ordering; must be pure and safe to call concurrently.
    using Evaluator = std::function<double(std::span<const std::size_t>)>;

    // Walks a shrinking list H = [1..M]: gene b picks position ((b - 1) mod |H|) + 1, which is
    // emitted and removed. Throws InvalidArgument when N > M, B.size() != N or a gene is 0.
    PortOrdering decode(std::span<const std::size_t> chromosome, std::size_t m, std::size_t n);

    // Throws InvalidArgument unless every entry is in 1..M and all are distinct.
    void validate_ordering(std::span<const std::size_t> ordering, std::size_t m);

    // Number of N-orderings drawn from M states, M! / (M - N)!, saturating at UINT64_MAX.
    std::uint64_t ordering_count(std::size_t m, std::size_t n);

    struct OrderResult
    {
        PortOrdering ordering;
        double error = 0.0;
        std::vector<double> best_trace; // best error after initialization and after each generation
        std::uint64_t evaluations = 0;  // distinct orderings evaluated
    };

    struct GAParams
    {
        std::size_t max_generations = 200;
        std::size_t population_size = 600;
        double crossover_probability = 0.8;
        double mutation_probability = 0.1; // per gene
        double gene_swap_probability = 0.5;
        std::size_t elitism = 2;
        std::size_t tournament_size = 4;
        std::uint64_t seed = 1;
        std::size_t threads = 1; // concurrent fitness evaluations

        void validate() const;
    };

    // Genetic search over chromosomes, decoded to orderings, minimizing the evaluator.
    // Deterministic for a given seed regardless of the thread count.
    OrderResult ga_order(std::size_t m, std::size_t n, const Evaluator &evaluator, const GAParams &params);

    inline constexpr std::uint64_t default_brute_force_cap = 10'000'000;

    // Exhaustive minimum over all orderings in lexicographic order; the first minimum wins.
    // Throws LimitExceeded when the ordering count exceeds the cap.
    OrderResult brute_force_order(std::size_t m, std::size_t n, const Evaluator &evaluator,
                                  std::uint64_t cap = default_brute_force_cap);
}

#endif
