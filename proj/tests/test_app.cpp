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
#include "pixelfas/app/config.hpp"
#include "pixelfas/app/reports.hpp"
#include "pixelfas/error.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace pixelfas;
using namespace pixelfas::app;
namespace fs = std::filesystem;

namespace
{
    const std::string switch_keys = "switch_on_topology = series\nswitch_on_resistance_ohm = 5\n"
                                    "switch_off_topology = series\nswitch_off_capacitance_f = 0.05e-12\n";

    RunConfig parse(const std::string &text, const fs::path &base = ".")
    {
        std::istringstream in(text);
        return parse_config(in, "test.cfg", base);
    }

    fs::path scratch_dir(const std::string &name)
    {
        const auto dir = fs::temp_directory_path() / ("pixelfas_test_app_" + name);
        fs::remove_all(dir);
        fs::create_directories(dir);
        return dir;
    }
}

TEST_CASE("config: values, defaults and comments")
{
    const auto c = parse("# design\nmode = surrogate\ninternal_ports = 20   # pixels\nfas_ports=6\nswitches = 4\n"
                         "f_lower_hz = 2.4e9\nf_upper_hz = 2.6e9\nfrequency_samples = 3\npas_support = full-sphere\n"
                         "ga_population = 50\nseed = 7\n" +
                         switch_keys);
    CHECK(c.internal_ports == 20);
    CHECK(c.fas_ports == 6);
    CHECK(c.switches == 4);
    CHECK(c.frequency_samples == 3);
    CHECK(c.pas_support == numerics::PasSupport::full_sphere);
    CHECK(c.ga.population_size == 50);
    CHECK(c.ga.max_generations == 200);
    CHECK(c.seed == 7);
    CHECK(c.z0_ohm == 50.0);
    CHECK(c.target_matched_sets == 100);
    REQUIRE(c.switch_model.has_value());
    CHECK(c.switch_model->on.resistance_ohm == 5.0);
    CHECK_FALSE(c.switch_model->on.capacitance_f.has_value());
    CHECK(c.switch_model->off.capacitance_f == 0.05e-12);
    CHECK_NOTHROW(c.validate());

    const auto single = parse("f_lower_hz = 2.5e9\n");
    CHECK(single.f_upper_hz == 2.5e9);
}

TEST_CASE("config: content hash ignores order, spacing and comments")
{
    const auto a = parse("seed = 1\nfas_ports = 6\n");
    const auto b = parse("# comment\nfas_ports=6\n\n   seed   =  1  # trailing\n");
    const auto c = parse("seed = 2\nfas_ports = 6\n");
    CHECK(a.content_hash == b.content_hash);
    CHECK(a.content_hash != c.content_hash);
}

TEST_CASE("config: malformed input")
{
    CHECK_THROWS_WITH_AS(parse("seed = 1\nsed = 2\n"), doctest::Contains("test.cfg:2"), ConfigError);
    CHECK_THROWS_WITH_AS(parse("seed = 1\nseed = 2\n"), doctest::Contains("twice"), ConfigError);
    CHECK_THROWS_AS(parse("seed =\n"), ConfigError);
    CHECK_THROWS_AS(parse("seed 1\n"), ConfigError);
    CHECK_THROWS_AS(parse("seed = -1\n"), ConfigError);
    CHECK_THROWS_AS(parse("fas_ports = 1.5\n"), ConfigError);
    CHECK_THROWS_AS(parse("z0_ohm = fifty\n"), ConfigError);
    CHECK_THROWS_AS(parse("mode = magic\n"), ConfigError);
    CHECK_THROWS_AS(parse("pas_support = half\n"), ConfigError);
    CHECK_THROWS_AS(parse("switch_on_topology = diagonal\n"), ConfigError);
    CHECK_THROWS_AS(parse("hardwire_bits = 0102\n"), ConfigError);
}

TEST_CASE("config: validation")
{
    const std::string base = "f_lower_hz = 2.5e9\n" + switch_keys;
    CHECK_NOTHROW(parse(base).validate());
    CHECK_THROWS_AS(parse(base + "z0_ohm = 0\n").validate(), ConfigError);
    CHECK_THROWS_AS(parse(base + "switches = 3\nfas_ports = 9\n").validate(), ConfigError);
    CHECK_NOTHROW(parse(base + "switches = 3\nfas_ports = 8\n").validate());
    CHECK_THROWS_AS(parse("f_lower_hz = 2.5e9\n").validate(), ConfigError);
    CHECK_THROWS_AS(parse(base + "ga_crossover_probability = 1.2\n").validate(), ConfigError);
    CHECK_THROWS_AS(parse(base + "internal_ports = 6\n").validate(), ConfigError);
    CHECK_THROWS_AS(parse(base + "frequency_samples = 3\n").validate(), ConfigError);
    CHECK_THROWS_AS(parse("switch_off_topology = series\nswitch_off_capacitance_f = 0\n"
                          "switch_on_topology = series\nswitch_on_resistance_ohm = 5\nf_lower_hz = 1e9\n")
                        .validate(),
                    ConfigError);
    CHECK_NOTHROW(parse("mode = dipole\n").validate());
}

TEST_CASE("config: file inputs resolve against the config directory")
{
    const auto dir = scratch_dir("files");
    std::ofstream(dir / "net.zmat") << "x";
    fs::create_directories(dir / "bundle");
    const std::string text = "mode = files\nnetwork_path = net.zmat\npattern_dir = bundle\nf_lower_hz = 1e9\n" + switch_keys;
    std::ofstream(dir / "run.cfg") << text;
    const auto c = load_config(dir / "run.cfg");
    CHECK(c.network_path == dir / "net.zmat");
    CHECK(c.pattern_dir == dir / "bundle");
    CHECK_NOTHROW(c.validate());
    const auto missing = parse(text, dir / "elsewhere");
    CHECK_THROWS_WITH_AS(missing.validate(), doctest::Contains("net.zmat"), ConfigError);
    CHECK_THROWS_AS(load_config(dir / "nope.cfg"), ConfigError);
}

TEST_CASE("matrix CSV round trip and covariance reload")
{
    const auto dir = scratch_dir("csv");
    numerics::RealMatrix m{{1.0, 0.123456789012345678, 0.3}, {0.123456789012345678, 1.0, 1.0 / 3.0}, {0.3, 1.0 / 3.0, 1.0}};
    write_matrix_csv(dir / "m.csv", m);
    CHECK(read_matrix_csv(dir / "m.csv") == m);
    const auto c = read_covariance_csv(dir / "m.csv");
    CHECK(c.invariant_violation() <= 1e-9);

    std::ofstream(dir / "bad.csv") << "row,col,value\n1,1,1\n2,2,1\n";
    CHECK_THROWS_AS(read_matrix_csv(dir / "bad.csv"), ParseError);
    std::ofstream(dir / "asym.csv") << "row,col,value\n1,1,1\n1,2,0.5\n2,1,0.4\n2,2,1\n";
    CHECK_THROWS_AS(read_covariance_csv(dir / "asym.csv"), ParseError);
}

TEST_CASE("state table round trip")
{
    const auto dir = scratch_dir("table");
    StateTable t;
    t.switch_positions = {3, 8, 11};
    t.ports = {1, 2};
    t.state_indices = {5, 2};
    t.bits = {{1, 0, 1}, {0, 1, 0}};
    write_state_table(dir / "s.csv", t);
    const auto back = read_state_table(dir / "s.csv");
    CHECK(back.switch_positions == t.switch_positions);
    CHECK(back.ports == t.ports);
    CHECK(back.state_indices == t.state_indices);
    CHECK(back.bits == t.bits);

    std::ofstream(dir / "bad.csv") << "port,state_index,sw_3\n1,0,2\n";
    CHECK_THROWS_AS(read_state_table(dir / "bad.csv"), ParseError);
    CHECK(file_digest(dir / "s.csv") == file_digest(dir / "s.csv"));
    CHECK(file_digest(dir / "s.csv") != file_digest(dir / "bad.csv"));
}
