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

#include "pixelfas/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <numbers>
#include <numeric>
#include <sstream>

namespace pixelfas::em
{
    namespace
    {
        std::string trim(std::string_view s)
        {
            std::size_t b = 0, e = s.size();
            while (b < e && std::isspace(static_cast<unsigned char>(s[b])))
                ++b;
            while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
                --e;
            return std::string(s.substr(b, e - b));
        }

        std::string lower(std::string s)
        {
            std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c)
                           { return char(std::tolower(c)); });
            return s;
        }

        bool parse_double(std::string_view text, double &out)
        {
            const std::string t = trim(text);
            if (t.empty())
                return false;
            const char *first = t.data();
            if (*first == '+')
                ++first;
            const auto res = std::from_chars(first, t.data() + t.size(), out);
            return res.ec == std::errc() && res.ptr == t.data() + t.size();
        }

        bool parse_size(std::string_view text, std::size_t &out)
        {
            const std::string t = trim(text);
            const auto res = std::from_chars(t.data(), t.data() + t.size(), out);
            return !t.empty() && res.ec == std::errc() && res.ptr == t.data() + t.size();
        }

        std::vector<std::string> split(std::string_view s, char sep)
        {
            std::vector<std::string> parts;
            std::size_t start = 0;
            while (true)
            {
                const auto pos = s.find(sep, start);
                parts.emplace_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
                if (pos == std::string_view::npos)
                    break;
                start = pos + 1;
            }
            return parts;
        }

        std::vector<std::string> whitespace_tokens(std::string_view s)
        {
            std::vector<std::string> out;
            std::istringstream is{std::string(s)};
            std::string tok;
            while (is >> tok)
                out.push_back(tok);
            return out;
        }

        double frequency_unit(const std::string &unit, const std::string &source, std::size_t line)
        {
            const auto u = lower(unit);
            if (u == "hz")
                return 1.0;
            if (u == "khz")
                return 1e3;
            if (u == "mhz")
                return 1e6;
            if (u == "ghz")
                return 1e9;
            throw ParseError(source, line, "unknown frequency unit '" + unit + "'");
        }

        LoadedNetwork finish(std::vector<std::pair<double, ComplexMatrix>> blocks, const std::string &source)
        {
            std::stable_sort(blocks.begin(), blocks.end(), [](const auto &a, const auto &b)
                             { return a.first < b.first; });
            for (std::size_t i = 1; i < blocks.size(); ++i)
                if (blocks[i].first == blocks[i - 1].first)
                    throw ParseError(source, 0, "duplicate frequency " + format_double(blocks[i].first));
            std::vector<double> f;
            std::vector<ComplexMatrix> z;
            for (auto &[freq, m] : blocks)
            {
                f.push_back(freq);
                z.push_back(std::move(m));
            }
            LoadedNetwork out;
            try
            {
                out.network = MultiportNetwork(std::move(f), std::move(z));
                out.grid = FrequencyGrid(out.network.frequencies().front(), out.network.frequencies().back(),
                                         out.network.frequency_count());
            }
            catch (const InvalidArgument &e)
            {
                throw ParseError(source, 0, e.what());
            }
            out.reciprocity_error = out.network.reciprocity_error();
            out.reciprocity_warning = out.reciprocity_error > 1e-9;
            return out;
        }

        LoadedNetwork parse_native(const std::vector<std::string> &lines, const std::string &source)
        {
            std::size_t i = 0;
            auto next_content = [&]() -> bool
            {
                while (i < lines.size())
                {
                    const auto t = trim(lines[i]);
                    if (!t.empty() && t[0] != '!')
                        return true;
                    ++i;
                }
                return false;
            };

            if (!next_content())
                throw ParseError(source, 1, "empty file");
            const auto header = whitespace_tokens(lines[i]);
            const std::size_t header_line = i + 1;
            if (header.size() < 2 || header[0] != "#" || header[1] != "Zmatrix")
                throw ParseError(source, header_line, "expected '# Zmatrix' header");
            std::size_t ports = 0, freqs = 0;
            double unit_scale = 1.0;
            bool have_ports = false, have_freqs = false;
            for (std::size_t k = 2; k < header.size(); ++k)
            {
                const auto eq = header[k].find('=');
                if (eq == std::string::npos)
                    throw ParseError(source, header_line, "malformed header field '" + header[k] + "'");
                const auto key = header[k].substr(0, eq);
                const auto val = header[k].substr(eq + 1);
                if (key == "ports")
                    have_ports = parse_size(val, ports);
                else if (key == "freqs")
                    have_freqs = parse_size(val, freqs);
                else if (key == "unit")
                    unit_scale = frequency_unit(val, source, header_line);
                else
                    throw ParseError(source, header_line, "unknown header field '" + key + "'");
            }
            if (!have_ports || ports < 2)
                throw ParseError(source, header_line, "header needs ports=<n> with n >= 2");
            if (!have_freqs || freqs < 1)
                throw ParseError(source, header_line, "header needs freqs=<n> with n >= 1");
            ++i;

            std::vector<std::pair<double, ComplexMatrix>> blocks;
            for (std::size_t b = 0; b < freqs; ++b)
            {
                if (!next_content())
                    throw ParseError(source, lines.size() + 1,
                                     "unexpected end of file, expected 'freq' line of block " + std::to_string(b + 1));
                const auto ft = whitespace_tokens(lines[i]);
                double f = 0.0;
                if (ft.size() != 2 || ft[0] != "freq" || !parse_double(ft[1], f))
                    throw ParseError(source, i + 1, "expected 'freq <value>'");
                ++i;
                ComplexMatrix m(ports, ports);
                for (std::size_t r = 0; r < ports; ++r)
                {
                    if (!next_content())
                        throw ParseError(source, lines.size() + 1,
                                         "unexpected end of file, expected row " + std::to_string(r + 1) + " of " +
                                             std::to_string(ports) + " in block " + std::to_string(b + 1));
                    const auto entries = split(lines[i], ',');
                    if (entries.size() != ports)
                        throw ParseError(source, i + 1,
                                         "expected " + std::to_string(ports) + " entries, found " +
                                             std::to_string(entries.size()) + " (matrix is not square)");
                    for (std::size_t c = 0; c < ports; ++c)
                    {
                        const auto colon = entries[c].find(':');
                        double re = 0.0, im = 0.0;
                        if (colon == std::string::npos || !parse_double(std::string_view(entries[c]).substr(0, colon), re) ||
                            !parse_double(std::string_view(entries[c]).substr(colon + 1), im))
                            throw ParseError(source, i + 1, "malformed entry '" + trim(entries[c]) + "', expected re:im");
                        m(r, c) = complex(re, im);
                    }
                    ++i;
                }
                blocks.emplace_back(f * unit_scale, std::move(m));
            }
            if (next_content())
                throw ParseError(source, i + 1, "trailing content after " + std::to_string(freqs) + " frequency blocks");
            return finish(std::move(blocks), source);
        }

        struct Token
        {
            std::string text;
            std::size_t line;
        };
    }

    std::string format_double(double v)
    {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.17g", v);
        return buf;
    }

    LoadedNetwork parse_touchstone(std::istream &in, const std::string &source)
    {
        std::string line;
        std::size_t line_no = 0;
        double version = 0.0;
        std::size_t ports = 0, nfreq = 0;
        bool have_ports = false, have_nfreq = false;
        std::string matrix_format = "full";
        bool order_21_12 = false, have_order = false;
        double unit = 1e9;
        std::string parameter = "s", format = "ma";
        bool have_option = false, in_data = false, done = false;
        std::vector<Token> data;

        while (std::getline(in, line))
        {
            ++line_no;
            const auto bang = line.find('!');
            const std::string content = trim(bang == std::string::npos ? line : line.substr(0, bang));
            if (content.empty() || done)
                continue;
            if (content[0] == '[')
            {
                const auto close = content.find(']');
                if (close == std::string::npos)
                    throw ParseError(source, line_no, "unterminated keyword");
                const auto key = lower(content.substr(1, close - 1));
                const auto arg = trim(content.substr(close + 1));
                in_data = false;
                if (key == "version")
                {
                    if (!parse_double(arg, version))
                        throw ParseError(source, line_no, "malformed [Version]");
                }
                else if (key == "number of ports")
                    have_ports = parse_size(arg, ports);
                else if (key == "number of frequencies")
                    have_nfreq = parse_size(arg, nfreq);
                else if (key == "two-port data order")
                {
                    have_order = true;
                    if (arg == "21_12")
                        order_21_12 = true;
                    else if (arg != "12_21")
                        throw ParseError(source, line_no, "bad [Two-Port Data Order] '" + arg + "'");
                }
                else if (key == "matrix format")
                {
                    matrix_format = lower(arg);
                    if (matrix_format != "full" && matrix_format != "lower" && matrix_format != "upper")
                        throw ParseError(source, line_no, "bad [Matrix Format] '" + arg + "'");
                }
                else if (key == "network data")
                {
                    if (!have_option)
                        throw ParseError(source, line_no, "[Network Data] before option line");
                    in_data = true;
                }
                else if (key == "noise data" || key == "end")
                    done = true;
                else if (key == "mixed-mode order")
                    throw ParseError(source, line_no, "mixed-mode data is not supported");
                // [Reference], [Number of Noise Frequencies], [Begin Information] ... are ignored
                continue;
            }
            if (content[0] == '#')
            {
                if (have_option)
                    throw ParseError(source, line_no, "duplicate option line");
                have_option = true;
                const auto toks = whitespace_tokens(content.substr(1));
                for (std::size_t k = 0; k < toks.size(); ++k)
                {
                    const auto t = lower(toks[k]);
                    if (t == "hz" || t == "khz" || t == "mhz" || t == "ghz")
                        unit = frequency_unit(t, source, line_no);
                    else if (t == "s" || t == "y" || t == "z" || t == "h" || t == "g")
                        parameter = t;
                    else if (t == "ri" || t == "ma" || t == "db")
                        format = t;
                    else if (t == "r")
                        ++k; // reference resistance, irrelevant for unnormalized Z data
                    else
                        throw ParseError(source, line_no, "unknown option '" + toks[k] + "'");
                }
                if (parameter != "z")
                    throw ParseError(source, line_no, "only Z-parameter data is accepted (found '" + parameter + "')");
                continue;
            }
            if (!in_data)
                throw ParseError(source, line_no, "unexpected content outside [Network Data]");
            for (auto &t : whitespace_tokens(content))
                data.push_back({std::move(t), line_no});
        }

        if (version < 2.0)
            throw ParseError(source, 1, "not a Touchstone 2.0 file ([Version] 2.0 missing)");
        if (!have_ports || ports < 2)
            throw ParseError(source, 0, "[Number of Ports] missing or below 2");
        if (!have_nfreq || nfreq < 1)
            throw ParseError(source, 0, "[Number of Frequencies] missing");
        if (ports == 2 && !have_order)
            throw ParseError(source, 0, "[Two-Port Data Order] is required for 2-port files");

        const std::size_t per_freq = matrix_format == "full" ? ports * ports : ports * (ports + 1) / 2;
        const std::size_t expected = nfreq * (1 + 2 * per_freq);
        if (data.size() < expected)
            throw ParseError(source, line_no + 1,
                             "unexpected end of network data: expected " + std::to_string(expected) +
                                 " values, found " + std::to_string(data.size()));
        if (data.size() > expected)
            throw ParseError(source, data[expected].line, "more network data than [Number of Frequencies] declares");

        std::size_t k = 0;
        auto value = [&]() -> double
        {
            double v = 0.0;
            if (!parse_double(data[k].text, v))
                throw ParseError(source, data[k].line, "malformed number '" + data[k].text + "'");
            ++k;
            return v;
        };
        auto pair = [&]() -> complex
        {
            const double a = value();
            const double b = value();
            if (format == "ri")
                return {a, b};
            const double mag = format == "ma" ? a : std::pow(10.0, a / 20.0);
            return std::polar(mag, b * std::numbers::pi / 180.0);
        };

        std::vector<std::pair<double, ComplexMatrix>> blocks;
        for (std::size_t b = 0; b < nfreq; ++b)
        {
            const double f = value() * unit;
            ComplexMatrix m(ports, ports);
            for (std::size_t r = 0; r < ports; ++r)
            {
                const std::size_t c0 = matrix_format == "upper" ? r : 0;
                const std::size_t c1 = matrix_format == "lower" ? r + 1 : ports;
                for (std::size_t c = c0; c < c1; ++c)
                {
                    std::size_t rr = r, cc = c;
                    if (ports == 2 && order_21_12 && r != c)
                        std::swap(rr, cc);
                    m(rr, cc) = pair();
                    if (matrix_format != "full")
                        m(cc, rr) = m(rr, cc);
                }
            }
            blocks.emplace_back(f, std::move(m));
        }
        return finish(std::move(blocks), source);
    }

    LoadedNetwork parse_network(std::istream &in, const std::string &source)
    {
        std::vector<std::string> lines;
        std::string line;
        while (std::getline(in, line))
            lines.push_back(line);
        for (const auto &l : lines)
        {
            const auto t = trim(l);
            if (t.empty() || t[0] == '!')
                continue;
            if (t.rfind("# Zmatrix", 0) == 0)
                return parse_native(lines, source);
            break;
        }
        std::string joined;
        for (const auto &l : lines)
            joined += l + '\n';
        std::istringstream ts(joined);
        return parse_touchstone(ts, source);
    }

    LoadedNetwork load_network(const std::filesystem::path &path)
    {
        std::ifstream in(path);
        if (!in)
            throw ParseError(path.string(), 0, "cannot open file");
        return parse_network(in, path.string());
    }

    void write_network(std::ostream &out, const MultiportNetwork &network)
    {
        out << "# Zmatrix ports=" << network.ports() << " freqs=" << network.frequency_count() << " unit=Hz\n";
        for (std::size_t t = 0; t < network.frequency_count(); ++t)
        {
            out << "freq " << format_double(network.frequencies()[t]) << '\n';
            const auto &m = network.z(t);
            for (std::size_t r = 0; r < m.rows(); ++r)
            {
                for (std::size_t c = 0; c < m.cols(); ++c)
                {
                    if (c)
                        out << ',';
                    out << format_double(m(r, c).real()) << ':' << format_double(m(r, c).imag());
                }
                out << '\n';
            }
        }
    }

    void write_network(const std::filesystem::path &path, const MultiportNetwork &network)
    {
        std::ofstream out(path);
        if (!out)
            throw Error("cannot write network file " + path.string());
        write_network(out, network);
        if (!out)
            throw Error("write failed for " + path.string());
    }

    // ---- pattern bundle ----

    void write_pattern_bundle(const std::filesystem::path &dir, const PatternGrid &patterns)
    {
        if (!std::filesystem::is_directory(dir))
            throw Error("output directory does not exist: " + dir.string());
        const auto &grid = patterns.grid();
        nlohmann::ordered_json manifest;
        manifest["format"] = "pixelfas-pattern-bundle";
        manifest["version"] = 1;
        manifest["ports"] = patterns.ports();
        manifest["frequencies_hz"] = patterns.frequencies();
        manifest["support"] = numerics::to_string(grid.support);
        manifest["grid"] = {{"rule", "gauss-legendre-cos-theta x trapezoid-phi"},
                            {"support", numerics::to_string(grid.support)},
                            {"theta_nodes", grid.resolution.theta_nodes},
                            {"phi_nodes", grid.resolution.phi_nodes},
                            {"node_count", grid.size()}};
        std::vector<std::string> files;
        for (std::size_t t = 0; t < patterns.frequency_count(); ++t)
            files.push_back("pattern_f" + std::to_string(t + 1) + ".csv");
        manifest["files"] = files;
        {
            std::ofstream out(dir / "manifest.json");
            if (!out)
                throw Error("cannot write " + (dir / "manifest.json").string());
            out << manifest.dump(2) << '\n';
        }

        for (std::size_t t = 0; t < patterns.frequency_count(); ++t)
        {
            const auto path = dir / files[t];
            std::ofstream out(path);
            if (!out)
                throw Error("cannot write " + path.string());
            out << "port,theta_rad,phi_rad,re_etheta,im_etheta,re_ephi,im_ephi\n";
            std::string row;
            for (std::size_t p = 0; p < patterns.ports(); ++p)
            {
                const auto field = patterns.port(t, p);
                for (std::size_t k = 0; k < grid.size(); ++k)
                {
                    row.clear();
                    row += std::to_string(p);
                    for (double v : {grid.nodes[k].theta, grid.nodes[k].phi, field[k].theta.real(), field[k].theta.imag(),
                                     field[k].phi.real(), field[k].phi.imag()})
                    {
                        row += ',';
                        row += format_double(v);
                    }
                    row += '\n';
                    out << row;
                }
            }
            if (!out)
                throw Error("write failed for " + path.string());
        }
    }

    PatternGrid load_pattern_bundle(const std::filesystem::path &dir)
    {
        const auto manifest_path = dir / "manifest.json";
        std::ifstream min(manifest_path);
        if (!min)
            throw ParseError(manifest_path.string(), 0, "cannot open manifest");
        nlohmann::json manifest;
        std::size_t ports = 0;
        std::vector<double> freqs;
        numerics::QuadratureGrid grid;
        std::vector<std::string> files;
        try
        {
            min >> manifest;
            ports = manifest.at("ports").get<std::size_t>();
            freqs = manifest.at("frequencies_hz").get<std::vector<double>>();
            const auto &g = manifest.at("grid");
            numerics::QuadratureResolution res;
            res.theta_nodes = g.at("theta_nodes").get<std::size_t>();
            res.phi_nodes = g.at("phi_nodes").get<std::size_t>();
            grid = numerics::build_quadrature(numerics::pas_support_from_string(g.at("support").get<std::string>()), res);
            if (g.contains("node_count") && g.at("node_count").get<std::size_t>() != grid.size())
                throw ParseError(manifest_path.string(), 0, "grid node_count does not match the declared rule");
            if (manifest.contains("files"))
                files = manifest.at("files").get<std::vector<std::string>>();
            else
                for (std::size_t t = 0; t < freqs.size(); ++t)
                    files.push_back("pattern_f" + std::to_string(t + 1) + ".csv");
        }
        catch (const nlohmann::json::exception &e)
        {
            throw ParseError(manifest_path.string(), 0, std::string("malformed manifest: ") + e.what());
        }
        catch (const InvalidArgument &e)
        {
            throw ParseError(manifest_path.string(), 0, e.what());
        }
        if (files.size() != freqs.size())
            throw ParseError(manifest_path.string(), 0, "file list and frequency list differ in length");
        if (ports == 0 || freqs.empty())
            throw ParseError(manifest_path.string(), 0, "manifest declares no ports or no frequencies");

        PatternGrid patterns(grid, freqs, ports);
        const std::size_t nodes = grid.size();
        constexpr double angle_tol = 1e-12;

        for (std::size_t t = 0; t < freqs.size(); ++t)
        {
            const auto path = dir / files[t];
            const std::string source = path.string();
            std::ifstream in(path);
            if (!in)
                throw ParseError(source, 0, "missing pattern table for frequency sample " + std::to_string(t + 1));
            std::string line;
            std::size_t line_no = 0;
            if (!std::getline(in, line))
                throw ParseError(source, 1, "empty pattern table");
            ++line_no;
            if (trim(line) != "port,theta_rad,phi_rad,re_etheta,im_etheta,re_ephi,im_ephi")
                throw ParseError(source, 1, "unexpected header");
            std::vector<std::size_t> filled(ports, 0);
            while (std::getline(in, line))
            {
                ++line_no;
                if (trim(line).empty())
                    continue;
                const auto cols = split(line, ',');
                if (cols.size() != 7)
                    throw ParseError(source, line_no, "expected 7 columns");
                std::size_t p = 0;
                double v[6];
                if (!parse_size(cols[0], p))
                    throw ParseError(source, line_no, "malformed port index");
                for (int c = 0; c < 6; ++c)
                    if (!parse_double(cols[std::size_t(c) + 1], v[c]))
                        throw ParseError(source, line_no, "malformed number in column " + std::to_string(c + 2));
                if (p >= ports)
                    throw ParseError(source, line_no,
                                     "port " + std::to_string(p) + " exceeds manifest port count " + std::to_string(ports));
                const std::size_t k = filled[p];
                if (k >= nodes)
                    throw ParseError(source, line_no, "more rows than grid nodes for port " + std::to_string(p));
                if (std::abs(v[0] - grid.nodes[k].theta) > angle_tol || std::abs(v[1] - grid.nodes[k].phi) > angle_tol)
                    throw ParseError(source, line_no,
                                     "grid mismatch: node " + std::to_string(k) + " of port " + std::to_string(p) +
                                         " does not match the manifest grid");
                patterns.port(t, p)[k] = FieldSample{complex(v[2], v[3]), complex(v[4], v[5])};
                ++filled[p];
            }
            for (std::size_t p = 0; p < ports; ++p)
            {
                if (filled[p] == 0)
                    throw ParseError(source, 0, "missing port " + std::to_string(p) + " (manifest declares " +
                                                    std::to_string(ports) + " ports)");
                if (filled[p] != nodes)
                    throw ParseError(source, 0, "port " + std::to_string(p) + " has " + std::to_string(filled[p]) +
                                                    " rows, grid has " + std::to_string(nodes) + " nodes");
            }
        }
        if (!patterns.all_finite())
            throw ParseError(dir.string(), 0, "non-finite pattern values");
        return patterns;
    }

    void check_compatible(const MultiportNetwork &network, const PatternGrid &patterns)
    {
        if (network.ports() != patterns.ports())
            throw InvalidArgument("pattern bundle has " + std::to_string(patterns.ports()) +
                                  " ports but the network has " + std::to_string(network.ports()));
        for (double f : network.frequencies())
        {
            const bool found = std::any_of(patterns.frequencies().begin(), patterns.frequencies().end(),
                                           [f](double g)
                                           { return std::abs(g - f) <= 1e-9 * f; });
            if (!found)
                throw InvalidArgument("pattern bundle lacks network frequency " + format_double(f) + " Hz");
        }
    }
}
