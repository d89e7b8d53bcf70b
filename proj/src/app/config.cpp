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

#include "pixelfas/hash.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <set>

namespace pixelfas::app
{
    std::string to_string(InputMode mode)
    {
        switch (mode)
        {
        case InputMode::surrogate:
            return "surrogate";
        case InputMode::files:
            return "files";
        case InputMode::dipole:
            return "dipole";
        }
        return "?";
    }

    namespace
    {
        std::string trim(const std::string &s)
        {
            const auto b = s.find_first_not_of(" \t\r");
            if (b == std::string::npos)
                return {};
            const auto e = s.find_last_not_of(" \t\r");
            return s.substr(b, e - b + 1);
        }

        struct Reader
        {
            const std::string &source;
            std::size_t line;
            const std::string &key;
            const std::string &value;

            [[noreturn]] void fail(const std::string &what) const
            {
                throw ConfigError(source + ":" + std::to_string(line) + ": " + key + ": " + what);
            }

            double real() const
            {
                double v = 0.0;
                const char *first = value.data();
                if (!value.empty() && *first == '+')
                    ++first;
                const auto r = std::from_chars(first, value.data() + value.size(), v);
                if (r.ec != std::errc() || r.ptr != value.data() + value.size() || !std::isfinite(v))
                    fail("expected a finite number, got '" + value + "'");
                return v;
            }

            double positive() const
            {
                const double v = real();
                if (!(v > 0.0))
                    fail("must be positive");
                return v;
            }

            double nonnegative() const
            {
                const double v = real();
                if (v < 0.0)
                    fail("must not be negative");
                return v;
            }

            std::uint64_t u64() const
            {
                std::uint64_t v = 0;
                const auto r = std::from_chars(value.data(), value.data() + value.size(), v);
                if (r.ec != std::errc() || r.ptr != value.data() + value.size())
                    fail("expected a nonnegative integer, got '" + value + "'");
                return v;
            }

            std::size_t count() const
            {
                const auto v = u64();
                if (v == 0)
                    fail("must be at least 1");
                return std::size_t(v);
            }

            std::vector<std::size_t> index_list() const
            {
                std::vector<std::size_t> out;
                std::string item;
                std::size_t start = 0;
                while (start <= value.size())
                {
                    const auto comma = value.find(',', start);
                    item = trim(value.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
                    std::size_t v = 0;
                    const auto r = std::from_chars(item.data(), item.data() + item.size(), v);
                    if (item.empty() || r.ec != std::errc() || r.ptr != item.data() + item.size() || v == 0)
                        fail("expected a comma separated list of 1-based indices");
                    out.push_back(v);
                    if (comma == std::string::npos)
                        break;
                    start = comma + 1;
                }
                return out;
            }

            std::vector<std::uint8_t> bits() const
            {
                std::vector<std::uint8_t> out;
                for (char c : value)
                {
                    if (c != '0' && c != '1')
                        fail("expected a string of 0 and 1 characters");
                    out.push_back(std::uint8_t(c - '0'));
                }
                if (out.empty())
                    fail("empty bit string");
                return out;
            }
        };

        using Setter = std::function<void(RunConfig &, const Reader &)>;

        void branch_setters(std::map<std::string, Setter> &table, const std::string &prefix,
                            impm::Branch impm::SwitchModel::*branch)
        {
            auto get = [branch](RunConfig &c) -> impm::Branch &
            {
                if (!c.switch_model)
                {
                    c.switch_model.emplace();
                    c.switch_model->on = {};
                    c.switch_model->off = {};
                }
                return (*c.switch_model).*branch;
            };
            table[prefix + "_topology"] = [get](RunConfig &c, const Reader &r)
            {
                if (r.value == "series")
                    get(c).topology = impm::Branch::Topology::series;
                else if (r.value == "parallel")
                    get(c).topology = impm::Branch::Topology::parallel;
                else
                    r.fail("expected 'series' or 'parallel'");
            };
            table[prefix + "_resistance_ohm"] = [get](RunConfig &c, const Reader &r)
            { get(c).resistance_ohm = r.nonnegative(); };
            table[prefix + "_inductance_h"] = [get](RunConfig &c, const Reader &r)
            { get(c).inductance_h = r.nonnegative(); };
            table[prefix + "_capacitance_f"] = [get](RunConfig &c, const Reader &r)
            { get(c).capacitance_f = r.positive(); };
        }

        const std::map<std::string, Setter> &setters()
        {
            static const std::map<std::string, Setter> table = []
            {
                std::map<std::string, Setter> t;
                t["mode"] = [](RunConfig &c, const Reader &r)
                {
                    if (r.value == "surrogate")
                        c.mode = InputMode::surrogate;
                    else if (r.value == "files")
                        c.mode = InputMode::files;
                    else if (r.value == "dipole")
                        c.mode = InputMode::dipole;
                    else
                        r.fail("expected surrogate, files or dipole");
                };
                t["network_path"] = [](RunConfig &c, const Reader &r) { c.network_path = r.value; };
                t["pattern_dir"] = [](RunConfig &c, const Reader &r) { c.pattern_dir = r.value; };

                t["internal_ports"] = [](RunConfig &c, const Reader &r) { c.internal_ports = r.count(); };
                t["pixel_pitch_m"] = [](RunConfig &c, const Reader &r) { c.pixel_pitch_m = r.positive(); };
                t["surrogate_seed"] = [](RunConfig &c, const Reader &r) { c.surrogate_seed = r.u64(); };
                t["surrogate_center_frequency_hz"] = [](RunConfig &c, const Reader &r)
                { c.surrogate.center_frequency_hz = r.positive(); };
                t["surrogate_feed_resistance_ohm"] = [](RunConfig &c, const Reader &r)
                { c.surrogate.feed_impedance_ohm.real(r.nonnegative()); };
                t["surrogate_feed_reactance_ohm"] = [](RunConfig &c, const Reader &r)
                { c.surrogate.feed_impedance_ohm.imag(r.real()); };
                t["surrogate_self_resistance_ohm"] = [](RunConfig &c, const Reader &r)
                { c.surrogate.self_resistance_ohm = r.nonnegative(); };
                t["surrogate_self_reactance_ohm"] = [](RunConfig &c, const Reader &r)
                { c.surrogate.self_reactance_ohm = r.real(); };
                t["surrogate_coupling_resistance_ohm"] = [](RunConfig &c, const Reader &r)
                { c.surrogate.coupling_resistance_ohm = r.nonnegative(); };
                t["surrogate_coupling_reactance_ohm"] = [](RunConfig &c, const Reader &r)
                { c.surrogate.coupling_reactance_ohm = r.nonnegative(); };
                t["surrogate_feed_coupling_ohm"] = [](RunConfig &c, const Reader &r)
                { c.surrogate.feed_coupling_ohm = r.nonnegative(); };
                t["surrogate_decay_length_m"] = [](RunConfig &c, const Reader &r)
                { c.surrogate.decay_length_m = r.positive(); };
                t["surrogate_reactance_jitter_ohm"] = [](RunConfig &c, const Reader &r)
                { c.surrogate.reactance_jitter_ohm = r.nonnegative(); };

                t["fas_ports"] = [](RunConfig &c, const Reader &r) { c.fas_ports = r.count(); };
                t["aperture_wavelengths"] = [](RunConfig &c, const Reader &r) { c.aperture_wavelengths = r.positive(); };
                t["switches"] = [](RunConfig &c, const Reader &r) { c.switches = std::size_t(r.u64()); };
                t["z0_ohm"] = [](RunConfig &c, const Reader &r) { c.z0_ohm = r.positive(); };
                t["f_lower_hz"] = [](RunConfig &c, const Reader &r) { c.f_lower_hz = r.positive(); };
                t["f_upper_hz"] = [](RunConfig &c, const Reader &r) { c.f_upper_hz = r.positive(); };
                t["frequency_samples"] = [](RunConfig &c, const Reader &r) { c.frequency_samples = r.count(); };
                t["pas_support"] = [](RunConfig &c, const Reader &r)
                {
                    try
                    {
                        c.pas_support = numerics::pas_support_from_string(r.value);
                    }
                    catch (const InvalidArgument &)
                    {
                        r.fail("expected full-sphere, upper-hemisphere or horizon-ring");
                    }
                };
                t["theta_nodes"] = [](RunConfig &c, const Reader &r) { c.resolution.theta_nodes = r.count(); };
                t["phi_nodes"] = [](RunConfig &c, const Reader &r) { c.resolution.phi_nodes = r.count(); };

                branch_setters(t, "switch_on", &impm::SwitchModel::on);
                branch_setters(t, "switch_off", &impm::SwitchModel::off);

                t["ga_generations"] = [](RunConfig &c, const Reader &r) { c.ga.max_generations = std::size_t(r.u64()); };
                t["ga_population"] = [](RunConfig &c, const Reader &r) { c.ga.population_size = r.count(); };
                t["ga_crossover_probability"] = [](RunConfig &c, const Reader &r)
                { c.ga.crossover_probability = r.real(); };
                t["ga_mutation_probability"] = [](RunConfig &c, const Reader &r) { c.ga.mutation_probability = r.real(); };
                t["ga_elitism"] = [](RunConfig &c, const Reader &r) { c.ga.elitism = std::size_t(r.u64()); };
                t["ga_tournament_size"] = [](RunConfig &c, const Reader &r) { c.ga.tournament_size = r.count(); };

                t["seed"] = [](RunConfig &c, const Reader &r) { c.seed = r.u64(); };
                t["threads"] = [](RunConfig &c, const Reader &r) { c.threads = r.count(); };
                t["budget"] = [](RunConfig &c, const Reader &r) { c.budget = r.count(); };
                t["target_matched_sets"] = [](RunConfig &c, const Reader &r) { c.target_matched_sets = r.count(); };
                t["baseline_samples"] = [](RunConfig &c, const Reader &r) { c.baseline_samples = std::size_t(r.u64()); };

                t["switch_positions"] = [](RunConfig &c, const Reader &r) { c.switch_positions = r.index_list(); };
                t["hardwire_bits"] = [](RunConfig &c, const Reader &r) { c.hardwire_bits = r.bits(); };
                return t;
            }();
            return table;
        }
    }

    RunConfig parse_config(std::istream &in, const std::string &source, const std::filesystem::path &base_dir)
    {
        RunConfig config;
        config.source = source;
        std::map<std::string, std::string> seen;
        std::string raw;
        std::size_t line = 0;
        while (std::getline(in, raw))
        {
            ++line;
            const auto hash = raw.find('#');
            const std::string content = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
            if (content.empty())
                continue;
            const auto eq = content.find('=');
            if (eq == std::string::npos)
                throw ConfigError(source + ":" + std::to_string(line) + ": expected 'key = value'");
            const std::string key = trim(content.substr(0, eq));
            const std::string value = trim(content.substr(eq + 1));
            const auto it = setters().find(key);
            if (it == setters().end())
                throw ConfigError(source + ":" + std::to_string(line) + ": unknown key '" + key + "'");
            if (seen.contains(key))
                throw ConfigError(source + ":" + std::to_string(line) + ": key '" + key + "' given twice");
            if (value.empty())
                throw ConfigError(source + ":" + std::to_string(line) + ": key '" + key + "' has no value");
            it->second(config, Reader{source, line, key, value});
            seen.emplace(key, value);
        }

        if (!config.network_path.empty() && config.network_path.is_relative())
            config.network_path = base_dir / config.network_path;
        if (!config.pattern_dir.empty() && config.pattern_dir.is_relative())
            config.pattern_dir = base_dir / config.pattern_dir;
        if (!seen.contains("f_upper_hz"))
            config.f_upper_hz = config.f_lower_hz;

        Fnv1a h;
        for (const auto &[k, v] : seen)
        {
            h.update(k);
            h.update("=");
            h.update(v);
            h.update("\n");
        }
        config.content_hash = h.digest();
        return config;
    }

    RunConfig load_config(const std::filesystem::path &path)
    {
        std::ifstream in(path);
        if (!in)
            throw ConfigError("cannot open config file " + path.string());
        return parse_config(in, path.string(), path.parent_path());
    }

    void RunConfig::validate() const
    {
        if (fas_ports < 2)
            throw ConfigError("fas_ports must be at least 2");
        if (!(z0_ohm > 0.0))
            throw ConfigError("z0_ohm must be positive");
        try
        {
            ga.validate();
        }
        catch (const InvalidArgument &e)
        {
            throw ConfigError(e.what());
        }
        if (mode == InputMode::dipole)
            return;

        if (!(f_lower_hz > 0.0))
            throw ConfigError("f_lower_hz is required");
        if (f_upper_hz < f_lower_hz)
            throw ConfigError("f_upper_hz is below f_lower_hz");
        if (frequency_samples > 1 && f_upper_hz == f_lower_hz)
            throw ConfigError("several frequency samples need f_upper_hz > f_lower_hz");
        if (switches >= 63)
            throw ConfigError("switches must be below 63");
        if (fas_ports > (std::size_t(1) << switches))
            throw ConfigError("fas_ports = " + std::to_string(fas_ports) + " exceeds the 2^" + std::to_string(switches) +
                              " states of one switch set");
        if (!switch_model)
            throw ConfigError("switch model values are required (switch_on_* and switch_off_* keys)");
        try
        {
            switch_model->validate();
        }
        catch (const InvalidArgument &e)
        {
            throw ConfigError(std::string("switch model: ") + e.what());
        }
        if (mode == InputMode::files)
        {
            if (network_path.empty() || !std::filesystem::is_regular_file(network_path))
                throw ConfigError("network file not found: " + network_path.string());
            if (pattern_dir.empty() || !std::filesystem::is_directory(pattern_dir))
                throw ConfigError("pattern bundle directory not found: " + pattern_dir.string());
        }
        else if (switches >= internal_ports)
            throw ConfigError("switches must be fewer than internal_ports");
    }
}
