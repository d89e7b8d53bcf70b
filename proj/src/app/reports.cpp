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
#include "pixelfas/app/reports.hpp"

#include "pixelfas/app/config.hpp"
#include "pixelfas/em/io.hpp"
#include "pixelfas/hash.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <tuple>
#include <fstream>
#include <sstream>

namespace pixelfas::app
{
    namespace
    {
        std::vector<std::string> split_csv(const std::string &line)
        {
            std::vector<std::string> out;
            std::stringstream ss(line);
            std::string cell;
            while (std::getline(ss, cell, ','))
            {
                while (!cell.empty() && (cell.back() == '\r' || cell.back() == ' '))
                    cell.pop_back();
                out.push_back(cell);
            }
            return out;
        }

        template <typename T>
        bool parse_number(const std::string &s, T &out)
        {
            const auto r = std::from_chars(s.data(), s.data() + s.size(), out);
            return !s.empty() && r.ec == std::errc() && r.ptr == s.data() + s.size();
        }

        std::ofstream open_out(const std::filesystem::path &path)
        {
            std::ofstream out(path);
            if (!out)
                throw Error("cannot write " + path.string());
            return out;
        }
    }

    void write_matrix_csv(const std::filesystem::path &path, const numerics::RealMatrix &m)
    {
        auto out = open_out(path);
        out << "row,col,value\n";
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c)
                out << r + 1 << ',' << c + 1 << ',' << em::format_double(m(r, c)) << '\n';
        if (!out)
            throw Error("write failed for " + path.string());
    }

    numerics::RealMatrix read_matrix_csv(const std::filesystem::path &path)
    {
        std::ifstream in(path);
        if (!in)
            throw ParseError(path.string(), 0, "cannot open file");
        std::string line;
        std::size_t line_no = 1;
        if (!std::getline(in, line) || split_csv(line) != std::vector<std::string>{"row", "col", "value"})
            throw ParseError(path.string(), 1, "expected header row,col,value");
        std::vector<std::tuple<std::size_t, std::size_t, double>> entries;
        std::size_t rows = 0, cols = 0;
        while (std::getline(in, line))
        {
            ++line_no;
            if (line.empty())
                continue;
            const auto cells = split_csv(line);
            std::size_t r = 0, c = 0;
            double v = 0.0;
            if (cells.size() != 3 || !parse_number(cells[0], r) || !parse_number(cells[1], c) ||
                !parse_number(cells[2], v) || r == 0 || c == 0)
                throw ParseError(path.string(), line_no, "malformed matrix entry");
            entries.emplace_back(r, c, v);
            rows = std::max(rows, r);
            cols = std::max(cols, c);
        }
        if (entries.size() != rows * cols)
            throw ParseError(path.string(), 0, "matrix entries missing or repeated");
        numerics::RealMatrix m(rows, cols, std::numeric_limits<double>::quiet_NaN());
        for (const auto &[r, c, v] : entries)
            m(r - 1, c - 1) = v;
        for (double v : m.data())
            if (std::isnan(v))
                throw ParseError(path.string(), 0, "matrix entries missing or repeated");
        return m;
    }

    pcdm::CovarianceMatrix read_covariance_csv(const std::filesystem::path &path)
    {
        pcdm::CovarianceMatrix c;
        c.rho = read_matrix_csv(path);
        if (!c.rho.is_square())
            throw ParseError(path.string(), 0, "covariance matrix is not square");
        if (c.invariant_violation() > 1e-9)
            throw ParseError(path.string(), 0, "not a correlation matrix (asymmetric, diagonal not 1 or entries above 1)");
        return c;
    }

    void write_state_table(const std::filesystem::path &path, const StateTable &table)
    {
        auto out = open_out(path);
        out << "port,state_index";
        for (std::size_t q : table.switch_positions)
            out << ",sw_" << q;
        out << '\n';
        for (std::size_t r = 0; r < table.ports.size(); ++r)
        {
            out << table.ports[r] << ',' << table.state_indices[r];
            for (auto b : table.bits[r])
                out << ',' << int(b);
            out << '\n';
        }
        if (!out)
            throw Error("write failed for " + path.string());
    }

    StateTable read_state_table(const std::filesystem::path &path)
    {
        std::ifstream in(path);
        if (!in)
            throw ParseError(path.string(), 0, "cannot open state table");
        std::string line;
        if (!std::getline(in, line))
            throw ParseError(path.string(), 1, "empty state table");
        const auto header = split_csv(line);
        if (header.size() < 2 || header[0] != "port" || header[1] != "state_index")
            throw ParseError(path.string(), 1, "expected header port,state_index,sw_<q>...");
        StateTable table;
        for (std::size_t k = 2; k < header.size(); ++k)
        {
            std::size_t q = 0;
            if (header[k].rfind("sw_", 0) != 0 || !parse_number(header[k].substr(3), q) || q == 0)
                throw ParseError(path.string(), 1, "bad switch column '" + header[k] + "'");
            table.switch_positions.push_back(q);
        }
        std::size_t line_no = 1;
        while (std::getline(in, line))
        {
            ++line_no;
            if (line.empty() || line == "\r")
                continue;
            const auto cells = split_csv(line);
            if (cells.size() != header.size())
                throw ParseError(path.string(), line_no, "expected " + std::to_string(header.size()) + " columns");
            std::size_t port = 0;
            std::uint64_t state = 0;
            if (!parse_number(cells[0], port) || port == 0 || !parse_number(cells[1], state))
                throw ParseError(path.string(), line_no, "malformed port or state index");
            std::vector<std::uint8_t> bits;
            for (std::size_t k = 2; k < cells.size(); ++k)
            {
                if (cells[k] != "0" && cells[k] != "1")
                    throw ParseError(path.string(), line_no, "switch bits must be 0 or 1");
                bits.push_back(std::uint8_t(cells[k][0] - '0'));
            }
            table.ports.push_back(port);
            table.state_indices.push_back(state);
            table.bits.push_back(std::move(bits));
        }
        if (table.ports.empty())
            throw ParseError(path.string(), 0, "state table has no rows");
        return table;
    }

    std::string file_digest(const std::filesystem::path &path)
    {
        std::ifstream in(path, std::ios::binary);
        if (!in)
            throw Error("cannot read " + path.string());
        Fnv1a h;
        char buf[1 << 16];
        while (in)
        {
            in.read(buf, sizeof buf);
            h.update(buf, std::size_t(in.gcount()));
        }
        return hex64(h.digest());
    }
}
