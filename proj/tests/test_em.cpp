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
#include "pixelfas/em/io.hpp"
#include "pixelfas/em/surrogate.hpp"
#include "pixelfas/error.hpp"

#include <Eigen/Eigenvalues>
#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>

using namespace pixelfas;
using namespace pixelfas::em;
namespace fs = std::filesystem;

namespace
{
    fs::path scratch_dir(const std::string &name)
    {
        const auto dir = fs::temp_directory_path() / ("pixelfas_test_em_" + name);
        fs::remove_all(dir);
        fs::create_directories(dir);
        return dir;
    }

    LoadedNetwork parse(const std::string &text)
    {
        std::istringstream in(text);
        return parse_network(in, "mem");
    }

    std::size_t parse_error_line(const std::string &text)
    {
        try
        {
            parse(text);
        }
        catch (const ParseError &e)
        {
            return e.line();
        }
        return std::size_t(-1);
    }

    MultiportNetwork random_network(std::size_t ports, std::size_t freqs, std::uint64_t seed)
    {
        std::mt19937_64 rng(seed);
        std::normal_distribution<double> g(0.0, 30.0);
        std::vector<double> f;
        std::vector<ComplexMatrix> z;
        for (std::size_t t = 0; t < freqs; ++t)
        {
            f.push_back(1e9 + 1e8 * double(t) + 0.123456789);
            ComplexMatrix m(ports, ports);
            for (std::size_t r = 0; r < ports; ++r)
                for (std::size_t c = r; c < ports; ++c)
                    m(r, c) = m(c, r) = {g(rng) / 3.0, g(rng)};
            z.push_back(m);
        }
        return {f, z};
    }

    double min_eigen_real_part(const ComplexMatrix &z)
    {
        Eigen::MatrixXd re(z.rows(), z.cols());
        for (std::size_t r = 0; r < z.rows(); ++r)
            for (std::size_t c = 0; c < z.cols(); ++c)
                re(Eigen::Index(r), Eigen::Index(c)) = 0.5 * (z(r, c).real() + z(c, r).real());
        return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(re).eigenvalues().minCoeff();
    }
}

TEST_CASE("frequency grid samples")
{
    const FrequencyGrid g(2e9, 3e9, 5);
    const auto s = g.samples();
    REQUIRE(s.size() == 5);
    CHECK(s.front() == 2e9);
    CHECK(s.back() == 3e9);
    CHECK(s[2] == doctest::Approx(2.5e9));
    for (std::size_t t = 1; t < s.size(); ++t)
        CHECK(s[t] > s[t - 1]);
    CHECK(FrequencyGrid::single(2.5e9).samples() == std::vector<double>{2.5e9});
    CHECK_THROWS_AS(FrequencyGrid(3e9, 2e9, 2), InvalidArgument);
    CHECK_THROWS_AS(FrequencyGrid(2e9, 2e9, 2), InvalidArgument);
    CHECK_THROWS_AS(FrequencyGrid(2e9, 3e9, 0), InvalidArgument);
}

TEST_CASE("native network: two-port read-back")
{
    const auto loaded = parse("# Zmatrix ports=2 freqs=1 unit=Hz\n"
                              "freq 2.5e9\n"
                              "50:0, 0:0\n"
                              "0:0, 50:0\n");
    CHECK(loaded.network.internal_ports() == 1);
    CHECK(loaded.network.z_e(0) == complex(50, 0));
    CHECK(loaded.network.z_ei(0)(0, 0) == complex(0, 0));
    CHECK(loaded.grid == FrequencyGrid::single(2.5e9));
    CHECK_FALSE(loaded.reciprocity_warning);
}

TEST_CASE("native network: three frequency blocks, unit scaling, sorting")
{
    const auto loaded = parse("# Zmatrix ports=2 freqs=3 unit=GHz\n"
                              "freq 2.6\n1:1, 2:2\n2:2, 3:3\n"
                              "freq 2.4\n1:0, 2:0\n2:0, 3:0\n"
                              "freq 2.5\n1:0, 2:0\n2:0, 3:0\n");
    CHECK(loaded.network.frequency_count() == 3);
    CHECK(loaded.grid.size() == 3);
    CHECK(loaded.grid.lower() == doctest::Approx(2.4e9));
    CHECK(loaded.grid.upper() == doctest::Approx(2.6e9));
    CHECK(loaded.network.z(2)(0, 0) == complex(1, 1));
}

TEST_CASE("native network: errors carry line numbers")
{
    const std::string head = "# Zmatrix ports=2 freqs=2 unit=Hz\nfreq 1e9\n1:0, 0:0\n0:0, 1:0\n";
    CHECK(parse_error_line(head) == 5);                                // truncated: second block missing
    CHECK(parse_error_line(head + "freq 2e9\n1:0, 0:0\n") == 7);       // truncated inside a block
    CHECK(parse_error_line(head + "freq 2e9\n1:0, 0:0\n0:0\n") == 7);  // not square
    CHECK(parse_error_line(head + "freq 2e9\n1:0, 0:0\n0:0, 1x\n") == 7);
    CHECK(parse_error_line(head + "freq 2e9\n1:0, 0:0\n0:0, 1:0\nextra\n") == 8);
    CHECK(parse_error_line("# Zmatrix ports=2 freqs=1 unit=parsec\nfreq 1\n1:0, 0:0\n0:0, 1:0\n") == 1);
    CHECK(parse_error_line("# Zmatrix ports=2 freqs=2 unit=Hz\nfreq 1e9\n1:0, 0:0\n0:0, 1:0\n"
                           "freq 1e9\n1:0, 0:0\n0:0, 1:0\n") == 0); // duplicate frequency
}

TEST_CASE("native network: asymmetric data only raises the warning flag")
{
    const auto loaded = parse("# Zmatrix ports=2 freqs=1 unit=Hz\nfreq 1e9\n50:0, 10:0\n9:0, 50:0\n");
    CHECK(loaded.reciprocity_warning);
    CHECK(loaded.reciprocity_error == doctest::Approx(1.0 / 60.0));
}

TEST_CASE("native network: write then read is the identity")
{
    const auto net = random_network(7, 3, 99);
    std::stringstream buf;
    write_network(buf, net);
    const auto back = parse_network(buf, "mem");
    CHECK(back.network == net);

    const auto dir = scratch_dir("net");
    write_network(dir / "z.zmat", net);
    CHECK(load_network(dir / "z.zmat").network == net);
    CHECK_THROWS_AS(load_network(dir / "missing.zmat"), ParseError);
}

TEST_CASE("touchstone: Z parameters in RI, MA and DB")
{
    const auto ri = parse("[Version] 2.0\n# MHz Z RI R 50\n[Number of Ports] 2\n[Two-Port Data Order] 12_21\n"
                          "[Number of Frequencies] 1\n[Network Data]\n"
                          "2500 50 1 10 2 ! comment\n 10 2 20 -3\n[End]\n");
    CHECK(ri.network.frequencies()[0] == 2.5e9);
    CHECK(ri.network.z(0)(0, 0) == complex(50, 1));
    CHECK(ri.network.z(0)(0, 1) == complex(10, 2));
    CHECK(ri.network.z(0)(1, 1) == complex(20, -3));

    const auto ma = parse("[Version] 2.0\n# GHz Z MA\n[Number of Ports] 3\n[Number of Frequencies] 1\n"
                          "[Matrix Format] Upper\n[Network Data]\n"
                          "1.0 10 90 2 0 3 0\n 20 0 4 0\n 30 180\n");
    CHECK(ma.network.ports() == 3);
    CHECK(std::abs(ma.network.z(0)(0, 0) - complex(0, 10)) < 1e-12);
    CHECK(ma.network.z(0)(2, 0) == ma.network.z(0)(0, 2));
    CHECK(std::abs(ma.network.z(0)(2, 2) - complex(-30, 0)) < 1e-12);

    const auto db = parse("[Version] 2.0\n# Hz Z DB\n[Number of Ports] 2\n[Two-Port Data Order] 21_12\n"
                          "[Number of Frequencies] 1\n[Network Data]\n1e9 40 0 20 0 26.0206 0 6.0206 0\n");
    CHECK(db.network.z(0)(0, 0).real() == doctest::Approx(100.0));
    CHECK(db.network.z(0)(1, 0).real() == doctest::Approx(10.0));
    CHECK(db.network.z(0)(0, 1).real() == doctest::Approx(20.0).epsilon(1e-5));
}

TEST_CASE("touchstone: rejected inputs")
{
    const std::string ok_tail = "[Number of Ports] 2\n[Two-Port Data Order] 12_21\n[Number of Frequencies] 1\n"
                                "[Network Data]\n1 1 0 0 0 0 0 1 0\n";
    CHECK_THROWS_AS(parse("[Version] 2.0\n# GHz S RI\n" + ok_tail), ParseError);
    CHECK_THROWS_AS(parse("[Version] 1.1\n# GHz Z RI\n" + ok_tail), ParseError);
    CHECK_THROWS_AS(parse("[Version] 2.0\n# GHz Z RI\n[Number of Ports] 2\n[Number of Frequencies] 1\n"
                          "[Network Data]\n1 1 0 0 0 0 0 1 0\n"),
                    ParseError);
    CHECK(parse_error_line("[Version] 2.0\n# GHz Z RI\n[Number of Ports] 2\n[Two-Port Data Order] 12_21\n"
                           "[Number of Frequencies] 1\n[Network Data]\n1 1 0 0 0 0 0 1\n") == 8);
    CHECK(parse_error_line("[Version] 2.0\n# GHz Z RI\n[Number of Ports] 2\n[Two-Port Data Order] 12_21\n"
                           "[Number of Frequencies] 1\n[Network Data]\n1 1 0 0 0 0 x 1 0\n") == 7);
}

TEST_CASE("pattern bundle round trip is bit-identical")
{
    const auto grid = numerics::build_quadrature(numerics::PasSupport::upper_hemisphere, {5, 8});
    PatternGrid p(grid, {2.4e9, 2.5e9}, 3);
    std::mt19937_64 rng(4);
    std::normal_distribution<double> g;
    for (std::size_t t = 0; t < 2; ++t)
        for (std::size_t q = 0; q < 3; ++q)
            for (auto &s : p.port(t, q))
                s = {{g(rng), g(rng)}, {g(rng) * 1e-7, g(rng) / 3.0}};
    const auto dir = scratch_dir("bundle");
    write_pattern_bundle(dir, p);
    CHECK(fs::exists(dir / "manifest.json"));
    CHECK(fs::exists(dir / "pattern_f1.csv"));
    CHECK(fs::exists(dir / "pattern_f2.csv"));
    CHECK(load_pattern_bundle(dir) == p);
}

TEST_CASE("pattern bundle: two ports on four nodes")
{
    auto grid = numerics::build_quadrature(numerics::PasSupport::full_sphere, {2, 2});
    REQUIRE(grid.size() == 4);
    PatternGrid p(grid, {1e9}, 2);
    p.port(0, 1)[3] = {{1, 2}, {3, 4}};
    const auto dir = scratch_dir("small");
    write_pattern_bundle(dir, p);
    const auto back = load_pattern_bundle(dir);
    CHECK(back.ports() == 2);
    CHECK(back.node_count() == 4);
    CHECK(back.port(0, 1)[3] == FieldSample{{1, 2}, {3, 4}});
}

TEST_CASE("pattern bundle errors")
{
    const auto grid = numerics::build_quadrature(numerics::PasSupport::upper_hemisphere, {3, 4});
    PatternGrid p(grid, {1e9}, 3);
    const auto dir = scratch_dir("broken");
    write_pattern_bundle(dir, p);

    SUBCASE("manifest declares more ports than the tables hold")
    {
        std::ifstream in(dir / "pattern_f1.csv");
        std::stringstream kept;
        std::string line;
        while (std::getline(in, line))
            if (line.rfind("2,", 0) != 0)
                kept << line << '\n';
        in.close();
        std::ofstream(dir / "pattern_f1.csv") << kept.str();
        CHECK_THROWS_WITH_AS(load_pattern_bundle(dir), doctest::Contains("missing port 2"), ParseError);
    }
    SUBCASE("grid mismatch")
    {
        std::ifstream in(dir / "pattern_f1.csv");
        std::stringstream all;
        all << in.rdbuf();
        in.close();
        std::string text = all.str();
        const auto pos = text.find('\n') + 1;
        const auto comma = text.find(',', pos + 2);
        text.insert(comma + 1, "9");
        std::ofstream(dir / "pattern_f1.csv") << text;
        CHECK_THROWS_AS(load_pattern_bundle(dir), ParseError);
    }
    SUBCASE("companion network with a different port count")
    {
        const auto net = random_network(2, 1, 1);
        MultiportNetwork at_1ghz({1e9}, {net.z(0)});
        CHECK_THROWS_AS(check_compatible(at_1ghz, load_pattern_bundle(dir)), InvalidArgument);
        const auto net3 = random_network(3, 1, 1);
        CHECK_NOTHROW(check_compatible(MultiportNetwork({1e9}, {net3.z(0)}), load_pattern_bundle(dir)));
        CHECK_THROWS_AS(check_compatible(MultiportNetwork({2e9}, {net3.z(0)}), load_pattern_bundle(dir)),
                        InvalidArgument);
    }
}

TEST_CASE("dipole translations: phases")
{
    numerics::QuadratureGrid grid;
    grid.support = numerics::PasSupport::horizon_ring;
    grid.nodes = {{std::numbers::pi / 2, std::numbers::pi / 2}, {std::numbers::pi / 2, 0.0}};
    grid.weights = {1.0, 1.0};
    const auto p = synth_dipole_translations(2, 0.5, grid);
    CHECK(std::abs(p.port(0, 0)[0].theta - p.port(0, 1)[0].theta) < 1e-15);
    const double dphase = std::arg(p.port(0, 1)[1].theta / p.port(0, 0)[1].theta);
    CHECK(std::abs(std::abs(dphase) - std::numbers::pi) < 1e-12);
    CHECK(p.port(0, 1)[1].phi == complex{});
    CHECK_THROWS_AS(synth_dipole_translations(1, 0.5, grid), InvalidArgument);
    CHECK_THROWS_AS(synth_dipole_translations(3, 0.0, grid), InvalidArgument);
}

TEST_CASE("pixel layout covers the requested port count")
{
    for (std::size_t q : {1u, 2u, 5u, 20u, 60u, 61u})
    {
        const auto layout = make_pixel_layout(q, 0.01);
        CHECK(layout.internal_ports() == q);
        CHECK(layout.sites.front().x_m == 0.0);
        CHECK(layout.sites.front().y_m == 0.0);
    }
}

TEST_CASE("surrogate: invariants and determinism")
{
    const auto grid = numerics::build_quadrature(numerics::PasSupport::upper_hemisphere, {8, 16});
    const FrequencyGrid freqs(2.4e9, 2.6e9, 3);

    const auto one = synth_pixel_surrogate(make_pixel_layout(1, 0.04), 5, {}, freqs, grid);
    CHECK(one.network.ports() == 2);
    for (std::size_t t = 0; t < 3; ++t)
        CHECK(min_eigen_real_part(one.network.z(t)) >= -1e-9 * std::abs(one.network.z(t)(0, 0)));

    for (std::uint64_t seed : {1u, 2u, 3u, 77u})
    {
        const auto s = synth_pixel_surrogate(make_pixel_layout(20, 0.04), seed, {}, freqs, grid);
        CHECK(s.network.reciprocity_error() <= 1e-9);
        for (std::size_t t = 0; t < 3; ++t)
        {
            double scale = 0.0;
            for (std::size_t r = 0; r < s.network.ports(); ++r)
                for (std::size_t c = 0; c < s.network.ports(); ++c)
                    scale = std::max(scale, std::abs(s.network.z(t)(r, c).real()));
            CHECK(min_eigen_real_part(s.network.z(t)) >= -1e-9 * scale);
        }
        CHECK(s.patterns.ports() == 21);
        CHECK(s.patterns.all_finite());
    }

    const auto a = synth_pixel_surrogate(make_pixel_layout(20, 0.04), 1, {}, freqs, grid);
    const auto b = synth_pixel_surrogate(make_pixel_layout(20, 0.04), 1, {}, freqs, grid);
    const auto c = synth_pixel_surrogate(make_pixel_layout(20, 0.04), 2, {}, freqs, grid);
    CHECK(a.network == b.network);
    CHECK(a.patterns == b.patterns);
    double diff = 0.0;
    for (std::size_t r = 0; r < 21; ++r)
        for (std::size_t col = 0; col < 21; ++col)
            diff = std::max(diff, std::abs(a.network.z(0)(r, col) - c.network.z(0)(r, col)));
    CHECK(diff > 1e-6);
}

TEST_CASE("surrogate: coupling decays with distance")
{
    SurrogateParams params;
    params.reactance_jitter_ohm = 0.0;
    params.decay_length_m = 0.02;
    const auto grid = numerics::build_quadrature(numerics::PasSupport::upper_hemisphere, {4, 8});
    const auto layout = make_pixel_layout(60, 0.04);
    const auto s = synth_pixel_surrogate(layout, 3, params, FrequencyGrid::single(2.5e9), grid);
    double near = 0.0, far = 0.0;
    std::size_t n_near = 0, n_far = 0;
    for (std::size_t p = 1; p <= 60; ++p)
        for (std::size_t q = p + 1; q <= 60; ++q)
        {
            const double d = std::hypot(layout.sites[p].x_m - layout.sites[q].x_m,
                                        layout.sites[p].y_m - layout.sites[q].y_m);
            const double mag = std::abs(s.network.z(0)(p, q));
            if (d < 0.05)
                near += mag, ++n_near;
            else if (d > 0.15)
                far += mag, ++n_far;
        }
    REQUIRE(n_near > 0);
    REQUIRE(n_far > 0);
    CHECK(near / double(n_near) > 10.0 * far / double(n_far));
}
