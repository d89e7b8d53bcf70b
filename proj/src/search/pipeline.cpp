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
#include "pixelfas/search/pipeline.hpp"

#include "pixelfas/error.hpp"
#include "pixelfas/random.hpp"
#include "pixelfas/search/parallel.hpp"

#include <limits>
#include <numeric>

namespace pixelfas::search
{
    std::vector<std::vector<std::uint8_t>> RunResult::state_table() const
    {
        std::vector<std::vector<std::uint8_t>> rows;
        if (best.members.empty())
            return rows;
        for (std::size_t d : ordering)
            rows.push_back(best.parent.state(best.members.at(d - 1).state_index).switch_bits);
        return rows;
    }

    std::vector<pcdm::CovarianceMatrix> state_covariance(const pcdm::PatternKernel &kernel,
                                                         const std::vector<StateResponse> &members)
    {
        std::vector<pcdm::CovarianceMatrix> out;
        const std::size_t ports = kernel.ports();
        for (std::size_t t = 0; t < kernel.k.size(); ++t)
        {
            numerics::ComplexMatrix currents(ports, members.size());
            for (std::size_t j = 0; j < members.size(); ++j)
            {
                const auto &i = members[j].currents.at(t);
                if (i.size() != ports)
                    throw InvalidArgument("state currents do not match the kernel port count");
                for (std::size_t p = 0; p < ports; ++p)
                    currents(p, j) = i[p];
            }
            out.push_back(pcdm::covariance_from_currents(kernel, t, currents));
        }
        return out;
    }

    double random_baseline(std::size_t m, const Evaluator &evaluator, std::size_t n, std::size_t samples,
                           std::uint64_t seed)
    {
        if (samples == 0)
            return 0.0;
        Rng rng(seed);
        double sum = 0.0;
        std::vector<std::size_t> pool(m);
        for (std::size_t s = 0; s < samples; ++s)
        {
            std::iota(pool.begin(), pool.end(), std::size_t{1});
            for (std::size_t i = 0; i < n; ++i)
                std::swap(pool[i], pool[i + std::size_t(uniform_index(rng, m - i))]);
            sum += evaluator(std::span<const std::size_t>(pool.data(), n));
        }
        return sum / double(samples);
    }

    namespace
    {
        Evaluator make_evaluator(const std::vector<pcdm::CovarianceMatrix> &rho, const pcdm::TargetCovariance &target)
        {
            return [&rho, &target](std::span<const std::size_t> d) { return pcdm::average_error(rho, target, d); };
        }

        pcdm::KernelCache &kernel_cache()
        {
            static pcdm::KernelCache cache;
            return cache;
        }

        void finish_best(RunResult &run, std::vector<pcdm::CovarianceMatrix> rho, const PipelineParams &params,
                         const OrderResult &order)
        {
            run.covariance = std::move(rho);
            run.ordering = order.ordering;
            run.error = order.error;
            run.best_trace = order.best_trace;
            run.selected.clear();
            for (const auto &c : run.covariance)
                run.selected.push_back(pcdm::select(c.rho, run.ordering));
            const auto evaluator = make_evaluator(run.covariance, run.target);
            run.baseline_mean_error = random_baseline(run.covariance.front().size(), evaluator, run.target.n,
                                                      params.baseline_samples, sub_seed(params.ga.seed, 3, 0));
        }
    }

    RunResult two_step_pipeline(const Problem &problem, const PipelineParams &params)
    {
        params.ga.validate();
        RunResult run;
        run.target = pcdm::target_covariance(params.search.ports, params.aperture_wavelengths);

        auto found = random_matched_search(problem, params.search);
        run.stats = found.stats;
        if (found.exhausted())
        {
            run.no_solution = true;
            return run;
        }

        const auto kernel = kernel_cache().get(problem.patterns, problem.pas);
        const std::size_t sets = found.sets.size();
        std::vector<std::vector<pcdm::CovarianceMatrix>> rho(sets);
        std::vector<OrderResult> orders(sets);
        parallel_for(sets, params.search.threads, [&](std::size_t i)
                     {
                         rho[i] = state_covariance(*kernel, found.sets[i].members);
                         GAParams ga = params.ga;
                         ga.seed = sub_seed(params.ga.seed, 2, found.sets[i].candidate_index);
                         ga.threads = 1;
                         orders[i] = ga_order(found.sets[i].m(), run.target.n, make_evaluator(rho[i], run.target), ga);
                     });

        std::size_t best = 0;
        for (std::size_t i = 0; i < sets; ++i)
        {
            run.per_set.push_back({found.sets[i].candidate_index, found.sets[i].m(), orders[i].ordering,
                                   orders[i].error, orders[i].evaluations});
            if (orders[i].error < orders[best].error)
                best = i;
        }
        run.best_set = best;
        run.best = std::move(found.sets[best]);
        finish_best(run, std::move(rho[best]), params, orders[best]);
        return run;
    }

    RunResult order_state_set(const Problem &problem, const StateSet &set, const PipelineParams &params)
    {
        problem.validate();
        params.ga.validate();
        RunResult run;
        run.target = pcdm::target_covariance(params.search.ports, params.aperture_wavelengths);

        MatchedSet matched{set, 0, {}};
        run.stats.sets_tried = 1;
        for (std::uint64_t s = 0; s < set.state_count(); ++s)
        {
            auto r = evaluate_state(problem, set.state(s));
            ++run.stats.states_evaluated;
            if (r.singular)
            {
                ++run.stats.singular_states;
                continue;
            }
            if (!run.stats.best_reflection_db || r.worst_reflection_db < *run.stats.best_reflection_db)
                run.stats.best_reflection_db = r.worst_reflection_db;
            if (r.matched())
                matched.members.push_back(std::move(r));
        }
        run.stats.largest_matched_count = matched.m();
        if (matched.m() < run.target.n)
        {
            run.no_solution = true;
            return run;
        }

        const auto kernel = kernel_cache().get(problem.patterns, problem.pas);
        auto rho = state_covariance(*kernel, matched.members);
        GAParams ga = params.ga;
        ga.seed = sub_seed(params.ga.seed, 2, 0);
        ga.threads = params.search.threads;
        const auto order = ga_order(matched.m(), run.target.n, make_evaluator(rho, run.target), ga);
        run.per_set.push_back({0, matched.m(), order.ordering, order.error, order.evaluations});
        run.best = std::move(matched);
        finish_best(run, std::move(rho), params, order);
        return run;
    }

    RunResult order_injected_states(const pcdm::PatternKernel &kernel,
                                    const std::vector<numerics::ComplexMatrix> &currents,
                                    const PipelineParams &params)
    {
        params.ga.validate();
        if (currents.size() != kernel.k.size())
            throw InvalidArgument("need one current matrix per kernel frequency");
        RunResult run;
        run.target = pcdm::target_covariance(params.search.ports, params.aperture_wavelengths);
        std::vector<pcdm::CovarianceMatrix> rho;
        for (std::size_t t = 0; t < currents.size(); ++t)
            rho.push_back(pcdm::covariance_from_currents(kernel, t, currents[t]));
        const std::size_t m = rho.front().size();
        if (m < run.target.n)
            throw InvalidArgument("fewer injected states than FAS ports");
        GAParams ga = params.ga;
        ga.threads = params.search.threads;
        const auto order = ga_order(m, run.target.n, make_evaluator(rho, run.target), ga);
        run.per_set.push_back({0, m, order.ordering, order.error, order.evaluations});
        run.stats.sets_tried = 1;
        finish_best(run, std::move(rho), params, order);
        return run;
    }
}
