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
#include "pixelfas/app/oracle.hpp"

#include "pixelfas/app/commands.hpp"
#include "pixelfas/em/surrogate.hpp"
#include "pixelfas/impm/circuit.hpp"
#include "pixelfas/numerics/bessel.hpp"
#include "pixelfas/numerics/linear_solve.hpp"
#include "pixelfas/pcdm/covariance.hpp"
#include "pixelfas/random.hpp"
#include "pixelfas/search/ordering.hpp"

#include <json.hpp>

#include <chrono>
#include <cmath>
#include <numbers>
#include <ostream>
#include <set>

namespace pixelfas::app
{
    namespace
    {
        using numerics::complex;
        using numerics::ComplexMatrix;

        template <typename F>
        SuiteReport timed(const std::string &name, F &&body)
        {
            const auto start = std::chrono::steady_clock::now();
            SuiteReport r;
            r.name = name;
            try
            {
                body(r);
            }
            catch (const std::exception &e)
            {
                r.passed = false;
                r.detail = std::string("exception: ") + e.what();
            }
            r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            return r;
        }

        void dipole_suite(SuiteReport &r)
        {
            constexpr std::size_t n = 12;
            const auto grid = numerics::build_quadrature(numerics::PasSupport::horizon_ring);
            const auto patterns = em::synth_dipole_translations(n, 0.5, grid);
            std::vector<std::vector<em::FieldSample>> states;
            for (std::size_t p = 0; p < n; ++p)
            {
                const auto f = patterns.port(0, p);
                states.emplace_back(f.begin(), f.end());
            }
            em::PowerAngularSpectrum pas{numerics::PasSupport::horizon_ring, 1.0};
            const auto rho = pcdm::covariance_direct(states, pas, grid);
            double worst = 0.0;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                {
                    const double d = std::abs(double(i) - double(j));
                    const double expect = std::abs(numerics::bessel_j0(2.0 * std::numbers::pi * d * 0.5 / double(n - 1)));
                    worst = std::max(worst, std::abs(rho.rho(i, j) - expect));
                }
            r.measured = worst;
            r.tolerance = 1e-3;
            r.passed = worst <= r.tolerance;
        }

        void decode_suite(SuiteReport &r)
        {
            std::size_t failures = 0;
            for (std::size_t m = 1; m <= 6; ++m)
                for (std::size_t n = 1; n <= std::min<std::size_t>(4, m); ++n)
                {
                    search::Chromosome b(n, 1);
                    while (true)
                    {
                        const auto d = search::decode(b, m, n);
                        std::set<std::size_t> distinct(d.begin(), d.end());
                        if (d.size() != n || distinct.size() != n || *distinct.begin() < 1 || *distinct.rbegin() > m)
                            ++failures;
                        std::size_t k = 0;
                        while (k < n && b[k] == m)
                            b[k++] = 1;
                        if (k == n)
                            break;
                        ++b[k];
                    }
                }
            std::set<search::PortOrdering> image;
            for (std::size_t a = 1; a <= 4; ++a)
                for (std::size_t b = 1; b <= 4; ++b)
                    for (std::size_t c = 1; c <= 4; ++c)
                        image.insert(search::decode(std::vector<std::size_t>{a, b, c}, 4, 3));
            if (image.size() != 24)
                ++failures;
            r.measured = double(failures);
            r.tolerance = 0.0;
            r.passed = failures == 0;
            r.detail = "image size for M=4, N=3: " + std::to_string(image.size());
        }

        // Unit feed current, all port voltages and currents as unknowns of one dense system.
        std::pair<complex, std::vector<complex>> augmented_solve(const ComplexMatrix &z, const impm::LoadMap &loads,
                                                                 std::size_t t)
        {
            const std::size_t p = z.rows();
            ComplexMatrix a(2 * p, 2 * p);
            ComplexMatrix rhs(2 * p, 1);
            // v - Z i = 0; unknowns ordered [v_0..v_Q, i_0..i_Q]
            for (std::size_t r = 0; r < p; ++r)
            {
                a(r, r) = 1.0;
                for (std::size_t c = 0; c < p; ++c)
                    a(r, p + c) = -z(r, c);
            }
            a(p, p) = 1.0;
            rhs(p, 0) = 1.0;
            for (std::size_t q = 1; q < p; ++q)
            {
                const auto &load = loads.at(t, q - 1);
                if (load.is_open())
                    a(p + q, p + q) = 1.0;
                else
                {
                    a(p + q, q) = 1.0;
                    a(p + q, p + q) = load.impedance();
                }
            }
            const auto x = numerics::LuDecomposition(a).solve(rhs);
            const complex z_in = x(0, 0);
            std::vector<complex> i(p);
            const complex scale = 1.0 / std::sqrt(z_in);
            for (std::size_t q = 0; q < p; ++q)
                i[q] = x(p + q, 0) * scale;
            return {z_in, i};
        }

        void schur_suite(SuiteReport &r)
        {
            Rng rng(20240611);
            double worst = 0.0;
            for (int trial = 0; trial < 200; ++trial)
            {
                const std::size_t q = 1 + std::size_t(uniform_index(rng, 30));
                ComplexMatrix z(q + 1, q + 1);
                for (std::size_t i = 0; i <= q; ++i)
                    for (std::size_t j = i; j <= q; ++j)
                    {
                        const complex v(uniform(rng, -20.0, 20.0), uniform(rng, -60.0, 60.0));
                        z(i, j) = z(j, i) = v;
                    }
                for (std::size_t i = 0; i <= q; ++i)
                    z(i, i) += complex(40.0 + 10.0 * double(q), 0.0);
                em::MultiportNetwork net({2.5e9}, {z});
                impm::LoadMap loads(q, 1, "oracle-" + std::to_string(trial));
                for (std::size_t k = 0; k < q; ++k)
                {
                    const auto kind = uniform_index(rng, 3);
                    loads.at(0, k) = kind == 0   ? impm::Load::open_circuit()
                                     : kind == 1 ? impm::Load::short_circuit()
                                                 : impm::Load::finite({uniform(rng, 0.0, 10.0), uniform(rng, -500.0, 500.0)});
                }
                const auto sol = impm::solve_ports(net, loads, 0);
                const auto [z_ref, i_ref] = augmented_solve(z, loads, 0);
                worst = std::max(worst, std::abs(sol.z_in - z_ref) / std::abs(z_ref));
                double num = 0.0, den = 0.0;
                for (std::size_t k = 0; k <= q; ++k)
                {
                    num = std::max(num, std::abs(sol.currents[k] - i_ref[k]));
                    den = std::max(den, std::abs(i_ref[k]));
                }
                worst = std::max(worst, num / den);
            }
            r.measured = worst;
            r.tolerance = 1e-9;
            r.passed = worst <= r.tolerance;
        }

        void pcdm_suite(SuiteReport &r, bool perturb)
        {
            const auto grid = numerics::build_quadrature(numerics::PasSupport::upper_hemisphere);
            const auto layout = em::make_pixel_layout(20, 0.04);
            const auto s = em::synth_pixel_surrogate(layout, 7, {}, em::FrequencyGrid::single(2.5e9), grid);
            em::PowerAngularSpectrum pas;
            auto kernel = pcdm::compute_kernel(s.patterns, pas, grid);
            if (perturb)
            {
                kernel.k[0](0, 1) *= 1.01;
                kernel.k[0](1, 0) = std::conj(kernel.k[0](0, 1));
            }
            Rng rng(99);
            double worst = 0.0;
            for (int trial = 0; trial < 30; ++trial)
            {
                const std::size_t m = 2 + std::size_t(uniform_index(rng, 7));
                ComplexMatrix currents(s.patterns.ports(), m);
                for (auto &v : currents.data())
                    v = complex(uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0));
                const auto fast = pcdm::covariance_from_currents(kernel, 0, currents);
                std::vector<std::vector<em::FieldSample>> states;
                for (std::size_t j = 0; j < m; ++j)
                    states.push_back(impm::total_pattern(s.patterns, 0, currents.column(j)));
                const auto direct = pcdm::covariance_direct(states, pas, grid);
                for (std::size_t i = 0; i < m; ++i)
                    for (std::size_t j = 0; j < m; ++j)
                        worst = std::max(worst, std::abs(fast.rho(i, j) - direct.rho(i, j)));
            }
            r.measured = worst;
            r.tolerance = 1e-10;
            r.passed = worst <= r.tolerance;
            if (perturb)
                r.detail = "kernel perturbed on purpose";
        }

        void ga_suite(SuiteReport &r)
        {
            constexpr std::size_t m = 8, n = 4;
            const auto target = pcdm::target_covariance(n, 0.5);
            int hits = 0;
            for (std::uint64_t inst = 0; inst < 20; ++inst)
            {
                Rng rng(sub_seed(4242, 0, inst));
                pcdm::CovarianceMatrix c{numerics::RealMatrix(m, m), 0.0};
                for (std::size_t i = 0; i < m; ++i)
                {
                    c.rho(i, i) = 1.0;
                    for (std::size_t j = i + 1; j < m; ++j)
                        c.rho(i, j) = c.rho(j, i) = uniform01(rng);
                }
                const std::vector<pcdm::CovarianceMatrix> rho{c};
                const search::Evaluator ev = [&](std::span<const std::size_t> d)
                { return pcdm::average_error(rho, target, d); };
                search::GAParams params;
                params.seed = sub_seed(4242, 1, inst);
                const auto ga = search::ga_order(m, n, ev, params);
                const auto bf = search::brute_force_order(m, n, ev);
                if (std::abs(ga.error - bf.error) <= 1e-12)
                    ++hits;
            }
            r.measured = double(hits);
            r.tolerance = 18.0;
            r.passed = hits >= 18;
            r.detail = std::to_string(hits) + "/20 instances reached the exhaustive optimum";
        }
    }

    std::vector<SuiteReport> run_oracles(const OracleOptions &options)
    {
        std::vector<SuiteReport> out;
        out.push_back(timed("dipole", dipole_suite));
        out.push_back(timed("decode", decode_suite));
        if (options.full)
        {
            out.push_back(timed("schur", schur_suite));
            out.push_back(timed("pcdm", [&](SuiteReport &r) { pcdm_suite(r, options.perturb_kernel); }));
            out.push_back(timed("ga", ga_suite));
        }
        return out;
    }

    int cmd_oracle(const OracleOptions &options, std::ostream &out)
    {
        const auto reports = run_oracles(options);
        nlohmann::ordered_json j;
        j["level"] = options.full ? "full" : "fast";
        bool all = true;
        auto suites = nlohmann::ordered_json::array();
        for (const auto &r : reports)
        {
            all = all && r.passed;
            suites.push_back({{"name", r.name},
                              {"passed", r.passed},
                              {"measured", r.measured},
                              {"tolerance", r.tolerance},
                              {"seconds", r.seconds},
                              {"detail", r.detail}});
        }
        j["suites"] = suites;
        j["passed"] = all;
        out << j.dump(2) << '\n';
        return all ? exit_code::ok : exit_code::oracle;
    }
}
