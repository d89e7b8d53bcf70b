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
#include "pixelfas/search/matched.hpp"

#include "pixelfas/error.hpp"
#include "pixelfas/random.hpp"
#include "pixelfas/search/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_set>

namespace pixelfas::search
{
    void Problem::validate() const
    {
        if (network.ports() != patterns.ports())
            throw InvalidArgument("network has " + std::to_string(network.ports()) + " ports, patterns have " +
                                  std::to_string(patterns.ports()));
        if (network.frequency_count() != patterns.frequency_count())
            throw InvalidArgument("network and patterns hold different frequency samples");
        for (std::size_t t = 0; t < network.frequency_count(); ++t)
            if (std::abs(network.frequencies()[t] - patterns.frequencies()[t]) > 1e-9 * network.frequencies()[t])
                throw InvalidArgument("network and patterns hold different frequency samples");
        if (!(z0_ohm > 0.0))
            throw InvalidArgument("reference impedance must be positive");
        switch_model.validate();
    }

    impm::PixelConfiguration StateSet::state(std::uint64_t index) const
    {
        impm::PixelConfiguration c;
        c.hardwire = hardwire;
        c.switch_positions = switch_positions;
        return c.with_state(index);
    }

    StateResponse evaluate_state(const Problem &problem, const impm::PixelConfiguration &config,
                                 bool stop_when_unmatched)
    {
        const auto &freqs = problem.network.frequencies();
        const auto loads = impm::build_load_map(config, problem.switch_model, freqs);
        StateResponse r;
        r.state_index = config.state_index();
        r.worst_reflection_db = impm::reflection_floor_db;
        for (std::size_t t = 0; t < freqs.size(); ++t)
        {
            try
            {
                auto sol = impm::solve_ports(problem.network, loads, t);
                const double s = impm::reflection_coefficient_db(sol.z_in, problem.z0_ohm);
                r.z_in.push_back(sol.z_in);
                r.reflection_db.push_back(s);
                r.currents.push_back(std::move(sol.currents));
                r.worst_reflection_db = std::max(r.worst_reflection_db, s);
            }
            catch (const SingularMatrixError &)
            {
                r.singular = true;
                return r;
            }
            catch (const InvalidArgument &)
            {
                // zero or -Z0 input impedance: physically meaningless, never a match
                r.singular = true;
                return r;
            }
            if (stop_when_unmatched && !(r.worst_reflection_db < matched_threshold_db))
                return r;
        }
        return r;
    }

    namespace
    {
        class CandidateSampler
        {
        public:
            CandidateSampler(std::size_t q, const SearchParams &params)
                : q_(q), p_(params.switches), rng_(sub_seed(params.seed, 1, 0)),
                  draw_limit_(params.budget * 64 + 4096)
            {
                if (p_ >= q_)
                    throw InvalidArgument("need fewer switches (" + std::to_string(p_) + ") than internal ports (" +
                                          std::to_string(q_) + ")");
            }

            // Next candidate not drawn before; nullopt when duplicates keep coming.
            std::optional<StateSet> next(std::uint64_t &duplicates)
            {
                while (draws_ < draw_limit_)
                {
                    ++draws_;
                    StateSet s;
                    std::vector<std::size_t> pool(q_);
                    std::iota(pool.begin(), pool.end(), std::size_t{1});
                    for (std::size_t i = 0; i < p_; ++i)
                        std::swap(pool[i], pool[i + std::size_t(uniform_index(rng_, q_ - i))]);
                    s.switch_positions.assign(pool.begin(), pool.begin() + std::ptrdiff_t(p_));
                    std::sort(s.switch_positions.begin(), s.switch_positions.end());
                    s.hardwire.resize(q_);
                    for (auto &b : s.hardwire)
                        b = bernoulli(rng_, 0.5) ? 1 : 0;
                    for (std::size_t pos : s.switch_positions)
                        s.hardwire[pos - 1] = 0;

                    std::string key(q_, '0');
                    for (std::size_t i = 0; i < q_; ++i)
                        key[i] = char('0' + s.hardwire[i]);
                    for (std::size_t pos : s.switch_positions)
                        key[pos - 1] = 's';
                    if (seen_.insert(std::move(key)).second)
                        return s;
                    ++duplicates;
                }
                return std::nullopt;
            }

        private:
            std::size_t q_, p_;
            Rng rng_;
            std::uint64_t draws_ = 0;
            std::uint64_t draw_limit_;
            std::unordered_set<std::string> seen_;
        };

        struct CandidateOutcome
        {
            std::vector<StateResponse> matched;
            std::uint64_t states = 0;
            std::uint64_t singular = 0;
            std::optional<double> best_reflection_db;
        };

        CandidateOutcome evaluate_candidate(const Problem &problem, const StateSet &set)
        {
            CandidateOutcome out;
            for (std::uint64_t s = 0; s < set.state_count(); ++s)
            {
                auto r = evaluate_state(problem, set.state(s), true);
                ++out.states;
                if (r.singular)
                {
                    ++out.singular;
                    continue;
                }
                if (!out.best_reflection_db || r.worst_reflection_db < *out.best_reflection_db)
                    out.best_reflection_db = r.worst_reflection_db;
                if (r.matched())
                    out.matched.push_back(std::move(r));
            }
            return out;
        }
    }

    std::vector<StateSet> sample_candidates(std::size_t q, const SearchParams &params, std::size_t count)
    {
        CandidateSampler sampler(q, params);
        std::vector<StateSet> out;
        std::uint64_t duplicates = 0;
        while (out.size() < count)
        {
            auto c = sampler.next(duplicates);
            if (!c)
                break;
            out.push_back(std::move(*c));
        }
        return out;
    }

    SearchResult random_matched_search(const Problem &problem, const SearchParams &params)
    {
        problem.validate();
        if (params.budget < 1 || params.target < 1)
            throw InvalidArgument("search budget and target must be at least 1");
        if (params.ports < 1)
            throw InvalidArgument("port count N must be at least 1");
        if (params.switches >= 64)
            throw InvalidArgument("at most 63 switches are supported");

        CandidateSampler sampler(problem.internal_ports(), params);
        SearchResult result;
        std::uint64_t generated = 0;
        bool sampler_dry = false;
        const std::size_t batch = std::max<std::size_t>(1, params.batch);

        while (!sampler_dry && generated < params.budget && result.sets.size() < params.target)
        {
            std::vector<StateSet> candidates;
            while (candidates.size() < batch && generated < params.budget)
            {
                auto c = sampler.next(result.stats.duplicate_draws);
                if (!c)
                {
                    sampler_dry = true;
                    break;
                }
                candidates.push_back(std::move(*c));
                ++generated;
            }
            std::vector<CandidateOutcome> outcomes(candidates.size());
            parallel_for(candidates.size(), params.threads,
                         [&](std::size_t i) { outcomes[i] = evaluate_candidate(problem, candidates[i]); });

            for (std::size_t i = 0; i < candidates.size() && result.sets.size() < params.target; ++i)
            {
                auto &o = outcomes[i];
                auto &st = result.stats;
                const std::uint64_t index = st.sets_tried++;
                st.states_evaluated += o.states;
                st.singular_states += o.singular;
                if (o.best_reflection_db && (!st.best_reflection_db || *o.best_reflection_db < *st.best_reflection_db))
                    st.best_reflection_db = o.best_reflection_db;
                st.largest_matched_count = std::max(st.largest_matched_count, o.matched.size());
                if (o.matched.size() >= params.ports)
                    result.sets.push_back({std::move(candidates[i]), index, std::move(o.matched)});
            }
        }
        return result;
    }
}
