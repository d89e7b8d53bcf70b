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
#include "pixelfas/search/ordering.hpp"

#include "pixelfas/error.hpp"
#include "pixelfas/random.hpp"
#include "pixelfas/search/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <unordered_map>

namespace pixelfas::search
{
    PortOrdering decode(std::span<const std::size_t> chromosome, std::size_t m, std::size_t n)
    {
        if (n > m)
            throw InvalidArgument("decode: N = " + std::to_string(n) + " exceeds M = " + std::to_string(m));
        if (chromosome.size() != n)
            throw InvalidArgument("decode: chromosome length differs from N");
        std::vector<std::size_t> h(m);
        std::iota(h.begin(), h.end(), std::size_t{1});
        PortOrdering d(n);
        for (std::size_t i = 0; i < n; ++i)
        {
            if (chromosome[i] < 1)
                throw InvalidArgument("decode: genes are 1-based");
            const std::size_t j = (chromosome[i] - 1) % h.size();
            d[i] = h[j];
            h.erase(h.begin() + std::ptrdiff_t(j));
        }
        return d;
    }

    void validate_ordering(std::span<const std::size_t> ordering, std::size_t m)
    {
        std::vector<bool> used(m + 1, false);
        for (std::size_t d : ordering)
        {
            if (d < 1 || d > m)
                throw InvalidArgument("ordering entry " + std::to_string(d) + " outside 1.." + std::to_string(m));
            if (used[d])
                throw InvalidArgument("ordering repeats state " + std::to_string(d));
            used[d] = true;
        }
    }

    std::uint64_t ordering_count(std::size_t m, std::size_t n)
    {
        if (n > m)
            return 0;
        std::uint64_t c = 1;
        for (std::size_t k = 0; k < n; ++k)
        {
            const std::uint64_t f = m - k;
            if (c > std::numeric_limits<std::uint64_t>::max() / f)
                return std::numeric_limits<std::uint64_t>::max();
            c *= f;
        }
        return c;
    }

    void GAParams::validate() const
    {
        auto prob = [](double p) { return p >= 0.0 && p <= 1.0; };
        if (!prob(crossover_probability) || !prob(mutation_probability) || !prob(gene_swap_probability))
            throw InvalidArgument("GA probabilities must lie in [0, 1]");
        if (population_size < 2 || tournament_size < 1)
            throw InvalidArgument("GA needs a population of at least 2 and a tournament of at least 1");
        if (elitism > population_size)
            throw InvalidArgument("GA elitism exceeds the population size");
    }

    namespace
    {
        struct OrderingHash
        {
            std::size_t operator()(const PortOrdering &d) const
            {
                std::uint64_t h = 0xcbf29ce484222325ULL;
                for (std::size_t v : d)
                    h = (h ^ v) * 0x100000001b3ULL;
                return std::size_t(h);
            }
        };

        class FitnessCache
        {
        public:
            FitnessCache(const Evaluator &evaluator, std::size_t threads) : evaluator_(evaluator), threads_(threads) {}

            // Fitness of every ordering; orderings not seen before are evaluated concurrently.
            std::vector<double> evaluate(const std::vector<PortOrdering> &orderings)
            {
                std::vector<const PortOrdering *> fresh;
                std::unordered_map<PortOrdering, std::size_t, OrderingHash> pending;
                for (const auto &d : orderings)
                    if (!cache_.contains(d) && pending.emplace(d, fresh.size()).second)
                        fresh.push_back(&d);
                std::vector<double> values(fresh.size());
                parallel_for(fresh.size(), threads_, [&](std::size_t i) { values[i] = evaluator_(*fresh[i]); });
                for (std::size_t i = 0; i < fresh.size(); ++i)
                    cache_.emplace(*fresh[i], values[i]);
                evaluations_ += fresh.size();

                std::vector<double> out(orderings.size());
                for (std::size_t i = 0; i < orderings.size(); ++i)
                    out[i] = cache_.at(orderings[i]);
                return out;
            }

            std::uint64_t evaluations() const { return evaluations_; }

        private:
            const Evaluator &evaluator_;
            std::size_t threads_;
            std::unordered_map<PortOrdering, double, OrderingHash> cache_;
            std::uint64_t evaluations_ = 0;
        };
    }

    OrderResult ga_order(std::size_t m, std::size_t n, const Evaluator &evaluator, const GAParams &params)
    {
        params.validate();
        if (n > m)
            throw InvalidArgument("ga_order: N exceeds M");
        if (n == 0)
            throw InvalidArgument("ga_order: N must be positive");

        Rng rng(params.seed);
        const std::size_t pop_size = params.population_size;
        auto random_gene = [&] { return std::size_t(uniform_index(rng, m)) + 1; };

        std::vector<Chromosome> population(pop_size, Chromosome(n));
        for (auto &c : population)
            for (auto &g : c)
                g = random_gene();

        FitnessCache cache(evaluator, params.threads);
        OrderResult best;
        best.error = std::numeric_limits<double>::infinity();

        std::vector<double> fitness;
        auto assess = [&]
        {
            std::vector<PortOrdering> decoded;
            decoded.reserve(pop_size);
            for (const auto &c : population)
                decoded.push_back(decode(c, m, n));
            fitness = cache.evaluate(decoded);
            for (std::size_t i = 0; i < pop_size; ++i)
                if (fitness[i] < best.error)
                {
                    best.error = fitness[i];
                    best.ordering = decoded[i];
                }
            best.best_trace.push_back(best.error);
        };
        assess();

        auto tournament = [&]() -> std::size_t
        {
            std::size_t winner = std::size_t(uniform_index(rng, pop_size));
            for (std::size_t k = 1; k < params.tournament_size; ++k)
            {
                const std::size_t c = std::size_t(uniform_index(rng, pop_size));
                if (fitness[c] < fitness[winner] || (fitness[c] == fitness[winner] && c < winner))
                    winner = c;
            }
            return winner;
        };

        std::vector<std::size_t> rank(pop_size);
        for (std::size_t gen = 0; gen < params.max_generations; ++gen)
        {
            std::iota(rank.begin(), rank.end(), std::size_t{0});
            std::stable_sort(rank.begin(), rank.end(), [&](std::size_t a, std::size_t b)
                             { return fitness[a] < fitness[b]; });

            std::vector<Chromosome> next;
            next.reserve(pop_size);
            for (std::size_t e = 0; e < params.elitism; ++e)
                next.push_back(population[rank[e]]);

            while (next.size() < pop_size)
            {
                Chromosome a = population[tournament()];
                Chromosome b = population[tournament()];
                if (bernoulli(rng, params.crossover_probability))
                    for (std::size_t g = 0; g < n; ++g)
                        if (bernoulli(rng, params.gene_swap_probability))
                            std::swap(a[g], b[g]);
                for (auto *child : {&a, &b})
                    for (auto &g : *child)
                        if (bernoulli(rng, params.mutation_probability))
                            g = random_gene();
                next.push_back(std::move(a));
                if (next.size() < pop_size)
                    next.push_back(std::move(b));
            }
            population = std::move(next);
            assess();
        }
        best.evaluations = cache.evaluations();
        return best;
    }

    OrderResult brute_force_order(std::size_t m, std::size_t n, const Evaluator &evaluator, std::uint64_t cap)
    {
        if (n > m)
            throw InvalidArgument("brute_force_order: N exceeds M");
        if (n == 0)
            throw InvalidArgument("brute_force_order: N must be positive");
        const std::uint64_t count = ordering_count(m, n);
        if (count > cap)
            throw LimitExceeded("brute force over " + std::to_string(count) + " orderings exceeds the cap of " +
                                std::to_string(cap));

        OrderResult best;
        best.error = std::numeric_limits<double>::infinity();
        PortOrdering d(n);
        std::vector<bool> used(m + 1, false);

        // Lexicographic enumeration by depth-first search.
        auto recurse = [&](auto &&self, std::size_t depth) -> void
        {
            if (depth == n)
            {
                const double e = evaluator(d);
                ++best.evaluations;
                if (e < best.error)
                {
                    best.error = e;
                    best.ordering = d;
                }
                return;
            }
            for (std::size_t s = 1; s <= m; ++s)
            {
                if (used[s])
                    continue;
                used[s] = true;
                d[depth] = s;
                self(self, depth + 1);
                used[s] = false;
            }
        };
        recurse(recurse, 0);
        best.best_trace.push_back(best.error);
        return best;
    }
}
