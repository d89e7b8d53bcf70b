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
#include "pixelfas/em/surrogate.hpp"
#include "pixelfas/error.hpp"
#include "pixelfas/impm/circuit.hpp"
#include "pixelfas/pcdm/covariance.hpp"
#include "pixelfas/search/matched.hpp"
#include "pixelfas/search/ordering.hpp"
#include "pixelfas/search/pipeline.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>

using namespace pixelfas;
using namespace pixelfas::search;
using numerics::RealMatrix;

namespace
{
    // Every chromosome in {1..m}^n, in lexicographic order.
    std::vector<Chromosome> all_chromosomes(std::size_t m, std::size_t n)
    {
        std::vector<Chromosome> out;
        Chromosome b(n, 1);
        while (true)
        {
            out.push_back(b);
            std::size_t i = n;
            while (i > 0 && b[i - 1] == m)
                b[--i] = 1;
            if (i == 0)
                return out;
            ++b[i - 1];
        }
    }

    RealMatrix random_correlation(std::size_t m, std::mt19937_64 &rng)
    {
        std::uniform_real_distribution<double> u(0.0, 1.0);
        RealMatrix rho(m, m, 1.0);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j)
                rho(i, j) = rho(j, i) = u(rng);
        return rho;
    }

    Evaluator evaluator_for(const std::vector<pcdm::CovarianceMatrix> &rho, const pcdm::TargetCovariance &target)
    {
        return [&](std::span<const std::size_t> d) { return pcdm::average_error(rho, target, d); };
    }

    impm::SwitchModel pin_diode()
    {
        impm::SwitchModel m;
        m.on.resistance_ohm = 5.0;
        m.off.capacitance_f = 0.05e-12;
        return m;
    }

    Problem surrogate_problem(std::size_t q, std::uint64_t seed, const em::SurrogateParams &params = {},
                              std::size_t freqs = 1)
    {
        const auto grid = numerics::build_quadrature(numerics::PasSupport::upper_hemisphere, {16, 32});
        const auto grid_f = freqs == 1 ? em::FrequencyGrid::single(2.5e9) : em::FrequencyGrid(2.45e9, 2.55e9, freqs);
        auto s = em::synth_pixel_surrogate(em::make_pixel_layout(q, 0.04), seed, params, grid_f, grid);
        Problem p;
        p.network = std::move(s.network);
        p.patterns = std::move(s.patterns);
        p.switch_model = pin_diode();
        return p;
    }

    double worst_reflection_recomputed(const Problem &problem, const impm::PixelConfiguration &config)
    {
        const auto loads = impm::build_load_map(config, problem.switch_model, problem.network.frequencies());
        double worst = -1e300;
        for (std::size_t t = 0; t < problem.network.frequency_count(); ++t)
            worst = std::max(worst, impm::reflection_coefficient_db(impm::input_impedance(problem.network, loads, t),
                                                                    problem.z0_ohm));
        return worst;
    }
}

TEST_CASE("decode: hand traces")
{
    CHECK(decode(std::vector<std::size_t>{1, 1, 1}, 4, 3) == PortOrdering{1, 2, 3});
    CHECK(decode(std::vector<std::size_t>{3, 3, 3}, 4, 3) == PortOrdering{3, 4, 1});
    CHECK(decode(std::vector<std::size_t>{7, 2}, 5, 2) == PortOrdering{2, 3});
    CHECK_THROWS_AS(decode(std::vector<std::size_t>{1, 1, 1}, 2, 3), InvalidArgument);
    CHECK_THROWS_AS(decode(std::vector<std::size_t>{0, 1}, 3, 2), InvalidArgument);
    CHECK_THROWS_AS(decode(std::vector<std::size_t>{1, 1}, 3, 3), InvalidArgument);
}

TEST_CASE("decode: exhaustive validity for small boxes")
{
    for (std::size_t m = 1; m <= 6; ++m)
        for (std::size_t n = 1; n <= std::min<std::size_t>(m, 4); ++n)
            for (const auto &b : all_chromosomes(m, n))
            {
                const auto d = decode(b, m, n);
                REQUIRE(d.size() == n);
                CHECK(std::set<std::size_t>(d.begin(), d.end()).size() == n);
                CHECK(*std::min_element(d.begin(), d.end()) >= 1);
                CHECK(*std::max_element(d.begin(), d.end()) <= m);
                CHECK(decode(b, m, n) == d);
            }
}

TEST_CASE("decode: surjective onto all orderings for M=4, N=3")
{
    std::set<PortOrdering> image;
    for (const auto &b : all_chromosomes(4, 3))
        image.insert(decode(b, 4, 3));
    CHECK(all_chromosomes(4, 3).size() == 64);
    CHECK(image.size() == 24);
    CHECK(ordering_count(4, 3) == 24);
    CHECK(ordering_count(8, 4) == 1680);
    CHECK(ordering_count(12, 12) == 479001600);
}

TEST_CASE("validate ordering")
{
    CHECK_NOTHROW(validate_ordering(std::vector<std::size_t>{2, 1}, 3));
    CHECK_THROWS_AS(validate_ordering(std::vector<std::size_t>{2, 2}, 3), InvalidArgument);
    CHECK_THROWS_AS(validate_ordering(std::vector<std::size_t>{0, 2}, 3), InvalidArgument);
    CHECK_THROWS_AS(validate_ordering(std::vector<std::size_t>{4, 2}, 3), InvalidArgument);
}

TEST_CASE("brute force: six orderings of M=3, N=2 by hand")
{
    const RealMatrix rho{{1.0, 0.9, 0.2}, {0.9, 1.0, 0.6}, {0.2, 0.6, 1.0}};
    const std::vector<pcdm::CovarianceMatrix> r{{rho, 1e9}};
    const pcdm::TargetCovariance target{2, 0.5, RealMatrix{{1.0, 0.55}, {0.55, 1.0}}};
    // Off-diagonal error is |rho_ab - 0.55| twice over four entries.
    const std::vector<std::pair<PortOrdering, double>> expected{
        {{1, 2}, 0.175}, {{1, 3}, 0.175}, {{2, 1}, 0.175}, {{2, 3}, 0.025}, {{3, 1}, 0.175}, {{3, 2}, 0.025}};
    const auto eval = evaluator_for(r, target);
    for (const auto &[d, e] : expected)
        CHECK(eval(d) == doctest::Approx(e));
    const auto best = brute_force_order(3, 2, eval);
    CHECK(best.ordering == PortOrdering{2, 3}); // first of the tied pair in lexicographic order
    CHECK(best.error == doctest::Approx(0.025));
    CHECK(best.evaluations == 6);
}

TEST_CASE("brute force: M = N enumerates N! orderings; cap")
{
    std::size_t calls = 0;
    const Evaluator count = [&](std::span<const std::size_t>) { ++calls; return 1.0; };
    const auto r = brute_force_order(5, 5, count);
    CHECK(calls == 120);
    CHECK(r.evaluations == 120);
    CHECK(r.ordering == PortOrdering{1, 2, 3, 4, 5});
    CHECK_THROWS_AS(brute_force_order(12, 12, count), LimitExceeded);
    CHECK_THROWS_AS(brute_force_order(8, 4, count, 1000), LimitExceeded);
}

TEST_CASE("reversed ordering ties under a symmetric target")
{
    std::mt19937_64 rng(5);
    const std::vector<pcdm::CovarianceMatrix> r{{random_correlation(6, rng), 1e9}};
    const auto target = pcdm::target_covariance(4, 0.5);
    const auto eval = evaluator_for(r, target);
    const auto best = brute_force_order(6, 4, eval);
    const PortOrdering reversed(best.ordering.rbegin(), best.ordering.rend());
    CHECK(eval(reversed) == best.error);
    CHECK(best.ordering < reversed); // the first of the tied pair in enumeration order is reported
    CHECK(brute_force_order(6, 4, eval).ordering == best.ordering);
}

TEST_CASE("GA: two orderings")
{
    const std::vector<pcdm::CovarianceMatrix> r{{RealMatrix{{1.0, 0.3}, {0.3, 1.0}}, 1e9}};
    const pcdm::TargetCovariance target{2, 0.5, RealMatrix{{1.0, 0.3}, {0.3, 1.0}}};
    const auto eval = evaluator_for(r, target);
    GAParams p;
    p.population_size = 20;
    p.max_generations = 5;
    const auto res = ga_order(2, 2, eval, p);
    CHECK(res.error == 0.0);
    CHECK(res.ordering == brute_force_order(2, 2, eval).ordering);

    // An evaluator that separates the two orderings.
    const Evaluator prefers_swap = [](std::span<const std::size_t> d) { return d[0] == 2 ? 0.1 : 0.2; };
    CHECK(ga_order(2, 2, prefers_swap, p).ordering == PortOrdering{2, 1});
}

TEST_CASE("GA reaches the brute-force optimum on M=8, N=4 instances")
{
    int hits = 0;
    for (std::uint64_t instance = 0; instance < 20; ++instance)
    {
        std::mt19937_64 rng(1000 + instance);
        const std::vector<pcdm::CovarianceMatrix> r{{random_correlation(8, rng), 1e9}};
        const auto target = pcdm::target_covariance(4, 0.5);
        const auto eval = evaluator_for(r, target);
        const auto exact = brute_force_order(8, 4, eval);
        CHECK(exact.evaluations == 1680);
        GAParams p;
        p.seed = instance + 1;
        const auto ga = ga_order(8, 4, eval, p);
        if (std::abs(ga.error - exact.error) <= 1e-12)
            ++hits;
        CHECK(ga.error >= exact.error);
    }
    CHECK(hits >= 18);
}

TEST_CASE("GA: monotone trace, determinism, thread independence")
{
    std::mt19937_64 rng(42);
    const std::vector<pcdm::CovarianceMatrix> r{{random_correlation(10, rng), 1e9}};
    const auto target = pcdm::target_covariance(6, 0.5);
    const auto eval = evaluator_for(r, target);
    GAParams p;
    p.population_size = 60;
    p.max_generations = 40;
    p.seed = 9;
    const auto a = ga_order(10, 6, eval, p);
    const auto b = ga_order(10, 6, eval, p);
    p.threads = 3;
    const auto c = ga_order(10, 6, eval, p);
    CHECK(a.best_trace.size() == 41);
    for (std::size_t g = 1; g < a.best_trace.size(); ++g)
        CHECK(a.best_trace[g] <= a.best_trace[g - 1]);
    CHECK(a.best_trace.back() == a.error);
    CHECK(eval(a.ordering) == a.error);
    CHECK(a.ordering == b.ordering);
    CHECK(a.best_trace == b.best_trace);
    CHECK(a.evaluations == b.evaluations);
    CHECK(a.ordering == c.ordering);
    CHECK(a.best_trace == c.best_trace);
}

TEST_CASE("GA parameter validation")
{
    const Evaluator e = [](std::span<const std::size_t>) { return 0.0; };
    GAParams p;
    p.crossover_probability = 1.5;
    CHECK_THROWS_AS(ga_order(4, 2, e, p), InvalidArgument);
    p = {};
    p.population_size = 0;
    CHECK_THROWS_AS(ga_order(4, 2, e, p), InvalidArgument);
    p = {};
    p.elitism = p.population_size + 1;
    CHECK_THROWS_AS(ga_order(4, 2, e, p), InvalidArgument);
    CHECK_THROWS_AS(ga_order(2, 3, e, GAParams{}), InvalidArgument);
}

TEST_CASE("candidate sampling")
{
    SearchParams p;
    p.switches = 4;
    p.seed = 3;
    const auto c = sample_candidates(20, p, 200);
    CHECK(c.size() == 200);
    std::set<std::pair<std::vector<std::size_t>, std::vector<std::uint8_t>>> seen;
    for (const auto &s : c)
    {
        CHECK(s.switch_positions.size() == 4);
        CHECK(std::is_sorted(s.switch_positions.begin(), s.switch_positions.end()));
        CHECK(std::adjacent_find(s.switch_positions.begin(), s.switch_positions.end()) == s.switch_positions.end());
        CHECK(s.switch_positions.front() >= 1);
        CHECK(s.switch_positions.back() <= 20);
        for (std::size_t pos : s.switch_positions)
            CHECK(s.hardwire[pos - 1] == 0);
        CHECK(s.state_count() == 16);
        seen.insert({s.switch_positions, s.hardwire});
    }
    CHECK(seen.size() == 200);
    CHECK(sample_candidates(20, p, 200) == c);
}

TEST_CASE("matched search: every member re-verifies")
{
    const auto problem = surrogate_problem(20, 4, {}, 3);
    SearchParams p;
    p.switches = 4;
    p.ports = 6;
    p.budget = 400;
    p.target = 10;
    p.seed = 2;
    const auto result = random_matched_search(problem, p);
    REQUIRE_FALSE(result.exhausted());
    std::size_t checked = 0;
    for (const auto &set : result.sets)
    {
        CHECK(set.m() >= 6);
        for (std::size_t k = 0; k < set.members.size(); ++k)
        {
            const auto &member = set.members[k];
            if (k > 0)
                CHECK(member.state_index > set.members[k - 1].state_index);
            CHECK(member.z_in.size() == 3);
            const double worst = worst_reflection_recomputed(problem, set.parent.state(member.state_index));
            CHECK(worst < matched_threshold_db);
            CHECK(worst == member.worst_reflection_db);
            ++checked;
        }
    }
    CHECK(checked > 0);
    CHECK(result.sets.size() <= 10);
}

TEST_CASE("matched search: determinism and thread independence")
{
    const auto problem = surrogate_problem(20, 6);
    SearchParams p;
    p.switches = 4;
    p.ports = 6;
    p.budget = 300;
    p.target = 8;
    p.seed = 11;
    const auto a = random_matched_search(problem, p);
    const auto b = random_matched_search(problem, p);
    p.threads = 3;
    const auto c = random_matched_search(problem, p);
    for (const auto *other : {&b, &c})
    {
        REQUIRE(a.sets.size() == other->sets.size());
        CHECK(a.stats.sets_tried == other->stats.sets_tried);
        CHECK(a.stats.states_evaluated == other->stats.states_evaluated);
        for (std::size_t k = 0; k < a.sets.size(); ++k)
        {
            CHECK(a.sets[k].parent == other->sets[k].parent);
            CHECK(a.sets[k].candidate_index == other->sets[k].candidate_index);
            REQUIRE(a.sets[k].m() == other->sets[k].m());
            for (std::size_t j = 0; j < a.sets[k].m(); ++j)
                CHECK(a.sets[k].members[j].z_in == other->sets[k].members[j].z_in);
        }
    }
}

TEST_CASE("matched search: weak feed coupling matches every state")
{
    em::SurrogateParams params;
    params.feed_impedance_ohm = {50.0, 0.0};
    params.feed_coupling_ohm = 1e-3;
    const auto problem = surrogate_problem(12, 1, params);
    SearchParams p;
    p.switches = 3;
    p.ports = 4;
    p.budget = 5;
    p.target = 1;
    const auto result = random_matched_search(problem, p);
    REQUIRE(result.sets.size() == 1);
    CHECK(result.sets[0].candidate_index == 0);
    CHECK(result.sets[0].m() == 8);
    CHECK(result.stats.sets_tried == 1);
}

TEST_CASE("matched search: mismatched feed exhausts the budget")
{
    em::SurrogateParams params;
    params.feed_impedance_ohm = {600.0, 0.0};
    params.feed_coupling_ohm = 1.0;
    const auto problem = surrogate_problem(12, 1, params);
    SearchParams p;
    p.switches = 3;
    p.ports = 4;
    p.budget = 25;
    p.target = 1;
    const auto result = random_matched_search(problem, p);
    CHECK(result.exhausted());
    CHECK(result.stats.sets_tried == 25);
    REQUIRE(result.stats.best_reflection_db.has_value());
    CHECK(*result.stats.best_reflection_db > matched_threshold_db);
    CHECK(result.stats.largest_matched_count == 0);

    PipelineParams pp;
    pp.search = p;
    pp.search.ports = 4;
    const auto run = two_step_pipeline(problem, pp);
    CHECK(run.no_solution);
    CHECK(run.stats.sets_tried == 25);
}

TEST_CASE("matched search: budget larger than the candidate space")
{
    const auto problem = surrogate_problem(3, 1);
    SearchParams p;
    p.switches = 1;
    p.ports = 2;
    p.budget = 1000;
    p.target = 1000;
    const auto result = random_matched_search(problem, p);
    // 3 switch positions times 4 hardwire patterns on the remaining two ports.
    CHECK(result.stats.sets_tried == 12);
    CHECK(result.stats.duplicate_draws > 0);
}

TEST_CASE("evaluate_state agrees with a direct circuit solve")
{
    const auto problem = surrogate_problem(10, 2, {}, 2);
    impm::PixelConfiguration c{{1, 0, 1, 1, 0, 0, 1, 0, 1, 0}, {2, 5, 9}, {1, 0, 1}};
    const auto r = evaluate_state(problem, c);
    const auto loads = impm::build_load_map(c, problem.switch_model, problem.network.frequencies());
    for (std::size_t t = 0; t < 2; ++t)
    {
        const auto sol = impm::solve_ports(problem.network, loads, t);
        CHECK(r.z_in[t] == sol.z_in);
        CHECK(r.currents[t] == sol.currents);
        CHECK(r.reflection_db[t] == impm::reflection_coefficient_db(sol.z_in, 50.0));
    }
    CHECK(r.worst_reflection_db == std::max(r.reflection_db[0], r.reflection_db[1]));
}

TEST_CASE("pipeline: injected dipole states recover the identity ordering")
{
    const auto grid = numerics::build_quadrature(numerics::PasSupport::horizon_ring, {});
    const auto patterns = em::synth_dipole_translations(12, 0.5, grid);
    const auto kernel = pcdm::compute_kernel(patterns, {numerics::PasSupport::horizon_ring, 1.0});
    PipelineParams p;
    p.search.ports = 12;
    const auto run = order_injected_states(kernel, {numerics::ComplexMatrix::identity(12)}, p);
    CHECK(run.error <= 1e-3);
    PortOrdering identity(12);
    std::iota(identity.begin(), identity.end(), std::size_t{1});
    const PortOrdering reversed(identity.rbegin(), identity.rend());
    CHECK((run.ordering == identity || run.ordering == reversed));
}

TEST_CASE("pipeline: small surrogate beats random orderings")
{
    const auto problem = surrogate_problem(20, 3);
    PipelineParams p;
    p.search.switches = 4;
    p.search.ports = 6;
    p.search.budget = 500;
    p.search.target = 5;
    p.ga.population_size = 100;
    p.ga.max_generations = 50;
    const auto run = two_step_pipeline(problem, p);
    REQUIRE_FALSE(run.no_solution);
    CHECK(run.error < run.baseline_mean_error);
    CHECK(run.ordering.size() == 6);
    CHECK(run.selected.size() == 1);
    CHECK(run.selected[0].rows() == 6);
    CHECK(run.covariance[0].size() == run.best.m());
    CHECK(run.per_set.size() <= 5);
    for (const auto &s : run.per_set)
        CHECK(s.error >= run.error);
    CHECK(run.per_set[run.best_set].error == run.error);
    const auto table = run.state_table();
    REQUIRE(table.size() == 6);
    for (std::size_t n = 0; n < 6; ++n)
        CHECK(run.best.parent.state(run.best.members[run.ordering[n] - 1].state_index).switch_bits == table[n]);

    const auto again = order_state_set(problem, run.best.parent, p);
    CHECK(again.best.m() == run.best.m());
    CHECK(again.covariance[0].rho == run.covariance[0].rho);
}
