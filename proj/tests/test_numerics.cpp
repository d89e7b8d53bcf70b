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
#include "pixelfas/error.hpp"
#include "pixelfas/numerics/bessel.hpp"
#include "pixelfas/numerics/linear_solve.hpp"
#include "pixelfas/numerics/quadrature.hpp"

#include <Eigen/Dense>
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

using namespace pixelfas;
using namespace pixelfas::numerics;

namespace
{
    // J0(x) = (1/pi) * integral_0^pi cos(x sin t) dt; the trapezoid rule on a periodic integrand is spectrally accurate.
    double j0_by_integral(double x)
    {
        const int n = 400;
        double s = 0.0;
        for (int k = 0; k < 2 * n; ++k)
            s += std::cos(x * std::sin(std::numbers::pi * k / n));
        return s / (2 * n);
    }

    ComplexMatrix random_matrix(std::size_t r, std::size_t c, std::mt19937_64 &rng)
    {
        std::normal_distribution<double> g;
        ComplexMatrix m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                m(i, j) = {g(rng), g(rng)};
        return m;
    }

    Eigen::MatrixXcd to_eigen(const ComplexMatrix &m)
    {
        Eigen::MatrixXcd e(m.rows(), m.cols());
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j)
                e(Eigen::Index(i), Eigen::Index(j)) = m(i, j);
        return e;
    }
}

TEST_CASE("bessel_j0 reference values")
{
    CHECK(bessel_j0(0.0) == 1.0);
    CHECK(bessel_j0(std::numbers::pi) == doctest::Approx(-0.30424217764409).epsilon(1e-12));
    CHECK(std::abs(bessel_j0(2.404826)) < 1e-5);
    CHECK_THROWS_AS(bessel_j0(std::nan("")), InvalidArgument);
    CHECK_THROWS_AS(bessel_j0(INFINITY), InvalidArgument);
}

TEST_CASE("bessel_j0 agrees with two independent evaluations on [0, 50]")
{
    double worst_std = 0.0, worst_int = 0.0;
    for (int k = 0; k <= 5000; ++k)
    {
        const double x = 0.01 * k;
        const double v = bessel_j0(x);
        worst_std = std::max(worst_std, std::abs(v - std::cyl_bessel_j(0.0, x)));
        if (x <= 20.0)
            worst_int = std::max(worst_int, std::abs(v - j0_by_integral(x)));
    }
    CHECK(worst_std <= 1e-12);
    CHECK(worst_int <= 1e-12);
}

TEST_CASE("bessel_j0 is even and bounded")
{
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-60.0, 60.0);
    for (int k = 0; k < 2000; ++k)
    {
        const double x = u(rng);
        CHECK(bessel_j0(x) == bessel_j0(-x));
        CHECK(std::abs(bessel_j0(x)) <= 1.0);
    }
}

TEST_CASE("first zero of J0 by bisection")
{
    double lo = 2.0, hi = 3.0;
    for (int i = 0; i < 100; ++i)
    {
        const double mid = 0.5 * (lo + hi);
        (bessel_j0(lo) * bessel_j0(mid) <= 0.0 ? hi : lo) = mid;
    }
    CHECK(lo == doctest::Approx(2.404825557695773).epsilon(1e-12));
}

TEST_CASE("solve: identity and diagonal")
{
    std::mt19937_64 rng(1);
    const auto b = random_matrix(3, 2, rng);
    CHECK(solve_hermitian_or_general(ComplexMatrix::identity(3), b) == b);

    ComplexMatrix d{{2.0, 0.0}, {0.0, 4.0}};
    ComplexMatrix rhs{{2.0}, {4.0}};
    const auto x = solve_hermitian_or_general(d, rhs);
    CHECK(std::abs(x(0, 0) - 1.0) < 1e-15);
    CHECK(std::abs(x(1, 0) - 1.0) < 1e-15);
}

TEST_CASE("solve: construct-then-solve round trip and residual")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial)
    {
        auto a = random_matrix(10, 10, rng);
        for (std::size_t i = 0; i < 10; ++i)
            a(i, i) += 8.0;
        const auto x0 = random_matrix(10, 3, rng);
        const auto b = multiply(a, x0);
        const auto x = solve_hermitian_or_general(a, b);
        CHECK(norm_inf(subtract(x, x0)) <= 1e-10 * norm_inf(x0));
        CHECK(norm_inf(subtract(multiply(a, x), b)) <= 1e-10 * norm_inf(b));
    }
}

TEST_CASE("solve agrees with Eigen on Hermitian and general systems")
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 30; ++trial)
    {
        const std::size_t n = 2 + trial % 12;
        auto g = random_matrix(n, n, rng);
        auto h = multiply(adjoint(g), g);
        for (std::size_t i = 0; i < n; ++i)
            h(i, i) += 1.0;
        const auto b = random_matrix(n, 2, rng);
        for (const auto *a : {&g, &h})
        {
            const auto x = solve_hermitian_or_general(*a, b);
            const Eigen::MatrixXcd ref = to_eigen(*a).fullPivLu().solve(to_eigen(b));
            CHECK((to_eigen(x) - ref).norm() <= 1e-9 * ref.norm());
        }
    }
}

TEST_CASE("solve: singular matrix names the configuration")
{
    ComplexMatrix a{{1.0, 2.0}, {2.0, 4.0}};
    ComplexMatrix b{{1.0}, {1.0}};
    try
    {
        solve_hermitian_or_general(a, b, {default_rcond_threshold, "cfg-42"});
        FAIL("expected SingularMatrixError");
    }
    catch (const SingularMatrixError &e)
    {
        CHECK(e.configuration_id() == "cfg-42");
    }
    ComplexMatrix nearly{{1.0, 1.0}, {1.0, 1.0 + 1e-16}};
    CHECK_THROWS_AS(solve_hermitian_or_general(nearly, b), SingularMatrixError);
    CHECK_THROWS_AS(solve_hermitian_or_general(ComplexMatrix(2, 3), ComplexMatrix(2, 1)), InvalidArgument);
    CHECK_THROWS_AS(solve_hermitian_or_general(ComplexMatrix::identity(2), ComplexMatrix(3, 1)), InvalidArgument);
}

TEST_CASE("quadrature weights integrate the support measure")
{
    for (auto res : {QuadratureResolution{2, 2}, QuadratureResolution{7, 13}, QuadratureResolution{}})
    {
        double s = 0.0;
        for (double w : build_quadrature(PasSupport::full_sphere, res).weights)
            s += w;
        CHECK(std::abs(s - 4 * std::numbers::pi) <= 1e-12);
        s = 0.0;
        for (double w : build_quadrature(PasSupport::upper_hemisphere, res).weights)
            s += w;
        CHECK(std::abs(s - 2 * std::numbers::pi) <= 1e-12);
    }
    const auto ring = build_quadrature(PasSupport::horizon_ring, {2, 360});
    CHECK(ring.size() == 360);
    double s = 0.0;
    for (double w : ring.weights)
        s += w;
    CHECK(std::abs(s - 2 * std::numbers::pi) <= 1e-12);
    for (const auto &d : ring.nodes)
        CHECK(d.theta == doctest::Approx(std::numbers::pi / 2));
}

TEST_CASE("quadrature nodes and weights are in range")
{
    for (auto support : {PasSupport::full_sphere, PasSupport::upper_hemisphere, PasSupport::horizon_ring})
    {
        const auto g = build_quadrature(support, {9, 17});
        for (std::size_t i = 0; i < g.size(); ++i)
        {
            CHECK(g.weights[i] >= 0.0);
            CHECK(g.nodes[i].theta >= 0.0);
            CHECK(g.nodes[i].theta <= std::numbers::pi);
            CHECK(g.nodes[i].phi >= 0.0);
            CHECK(g.nodes[i].phi < 2 * std::numbers::pi);
        }
    }
    CHECK_THROWS_AS(build_quadrature(PasSupport::full_sphere, {1, 8}), InvalidArgument);
    CHECK_THROWS_AS(build_quadrature(PasSupport::horizon_ring, {8, 1}), InvalidArgument);
    CHECK_THROWS_AS(pas_support_from_string("half-sphere"), InvalidArgument);
    CHECK(pas_support_from_string(to_string(PasSupport::horizon_ring)) == PasSupport::horizon_ring);
}

TEST_CASE("spherical harmonics integrate exactly on the sphere")
{
    const auto g = build_quadrature(PasSupport::full_sphere, {});
    double worst = 0.0;
    for (unsigned l = 0; l <= 40; ++l)
        for (int m = -int(l); m <= int(l); ++m)
        {
            std::complex<double> s{};
            for (std::size_t i = 0; i < g.size(); ++i)
            {
                const auto &d = g.nodes[i];
                const double p = std::sph_legendre(l, unsigned(std::abs(m)), d.theta);
                s += g.weights[i] * p * std::polar(1.0, m * d.phi);
            }
            const std::complex<double> expected = l == 0 ? std::sqrt(4 * std::numbers::pi) : 0.0;
            worst = std::max(worst, std::abs(s - expected));
        }
    CHECK(worst <= 1e-9);
}

TEST_CASE("Gauss-Legendre integrates polynomials to degree 2n-1")
{
    const auto [x, w] = gauss_legendre(10);
    for (int k = 0; k <= 19; ++k)
    {
        double s = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i)
            s += w[i] * std::pow(x[i], k);
        const double exact = k % 2 ? 0.0 : 2.0 / (k + 1);
        CHECK(std::abs(s - exact) <= 1e-14);
    }
}
