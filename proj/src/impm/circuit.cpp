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
#include "pixelfas/impm/circuit.hpp"

#include "pixelfas/error.hpp"
#include "pixelfas/numerics/linear_solve.hpp"

#include <cmath>

namespace pixelfas::impm
{
    LoadMap::LoadMap(std::size_t internal_ports, std::size_t frequencies, std::string configuration_id)
        : ports_(internal_ports), frequencies_(frequencies), id_(std::move(configuration_id)),
          loads_(internal_ports * frequencies)
    {
    }

    LoadMap build_load_map(const PixelConfiguration &config, const SwitchModel &model,
                           std::span<const double> frequencies_hz)
    {
        config.validate();
        const std::size_t q = config.internal_ports();
        LoadMap map(q, frequencies_hz.size(), config.id());
        std::vector<int> switch_of(q, -1);
        for (std::size_t p = 0; p < config.switch_count(); ++p)
            switch_of[config.switch_positions[p] - 1] = int(p);

        for (std::size_t t = 0; t < frequencies_hz.size(); ++t)
            for (std::size_t i = 0; i < q; ++i)
            {
                if (switch_of[i] >= 0)
                {
                    const auto &branch = config.switch_bits[std::size_t(switch_of[i])] ? model.on : model.off;
                    map.at(t, i) = Load::finite(branch.impedance(frequencies_hz[t]));
                }
                else
                    map.at(t, i) = config.hardwire[i] ? Load::short_circuit() : Load::open_circuit();
            }
        return map;
    }

    LoadMap build_load_map(const PixelConfiguration &config, const SwitchModel &model, const em::FrequencyGrid &freqs)
    {
        const auto f = freqs.samples();
        return build_load_map(config, model, f);
    }

    namespace
    {
        // Solution of the reduced system [Z_I' + Z_L'] y = Z_IE' over the ports that carry current.
        struct Reduced
        {
            std::vector<std::size_t> kept; // 0-based internal port indices
            numerics::ComplexMatrix y;     // kept.size() x 1
            complex z_in;
        };

        Reduced reduce(const em::MultiportNetwork &net, const LoadMap &loads, std::size_t t)
        {
            if (loads.internal_ports() != net.internal_ports())
                throw InvalidArgument("load map has " + std::to_string(loads.internal_ports()) +
                                      " ports, network has " + std::to_string(net.internal_ports()));
            if (t >= loads.frequency_count() || t >= net.frequency_count())
                throw InvalidArgument("frequency sample index out of range");

            Reduced r;
            for (std::size_t q = 0; q < loads.internal_ports(); ++q)
                if (!loads.at(t, q).is_open())
                    r.kept.push_back(q);

            const auto &z = net.z(t);
            const std::size_t k = r.kept.size();
            r.z_in = z(0, 0);
            if (k == 0)
                return r;

            numerics::ComplexMatrix a(k, k), b(k, 1);
            for (std::size_t i = 0; i < k; ++i)
            {
                const std::size_t pi = r.kept[i] + 1;
                for (std::size_t j = 0; j < k; ++j)
                    a(i, j) = z(pi, r.kept[j] + 1);
                a(i, i) += loads.at(t, r.kept[i]).impedance();
                b(i, 0) = z(pi, 0);
            }
            numerics::SolveOptions opts;
            opts.configuration_id = loads.configuration_id();
            r.y = numerics::solve_hermitian_or_general(a, b, opts);

            complex correction{};
            for (std::size_t i = 0; i < k; ++i)
                correction += z(0, r.kept[i] + 1) * r.y(i, 0);
            r.z_in -= correction;
            return r;
        }

        PortSolution currents_from(const Reduced &r, std::size_t internal_ports, complex z_in)
        {
            if (z_in == complex{})
                throw InvalidArgument("zero input impedance cannot be normalized");
            PortSolution s;
            s.z_in = z_in;
            s.currents.assign(internal_ports + 1, complex{});
            const complex i0 = 1.0 / std::sqrt(z_in);
            s.currents[0] = i0;
            for (std::size_t i = 0; i < r.kept.size(); ++i)
                s.currents[r.kept[i] + 1] = -r.y(i, 0) * i0;
            return s;
        }
    }

    complex input_impedance(const em::MultiportNetwork &net, const LoadMap &loads, std::size_t t)
    {
        return reduce(net, loads, t).z_in;
    }

    std::vector<complex> input_impedance(const em::MultiportNetwork &net, const LoadMap &loads)
    {
        std::vector<complex> out(loads.frequency_count());
        for (std::size_t t = 0; t < out.size(); ++t)
            out[t] = input_impedance(net, loads, t);
        return out;
    }

    PortSolution port_currents(const em::MultiportNetwork &net, const LoadMap &loads, std::size_t t, complex z_in)
    {
        return currents_from(reduce(net, loads, t), net.internal_ports(), z_in);
    }

    PortSolution solve_ports(const em::MultiportNetwork &net, const LoadMap &loads, std::size_t t)
    {
        const auto r = reduce(net, loads, t);
        return currents_from(r, net.internal_ports(), r.z_in);
    }

    double reflection_coefficient_db(complex z_in, double z0_ohm)
    {
        if (!(z0_ohm > 0.0) || !std::isfinite(z0_ohm))
            throw InvalidArgument("reference impedance must be positive");
        const complex den = z_in + z0_ohm;
        if (den == complex{})
            throw InvalidArgument("input impedance equals -Z0, reflection coefficient is unbounded");
        const double mag = std::abs((z_in - z0_ohm) / den);
        if (!(mag > 0.0))
            return reflection_floor_db;
        return std::max(reflection_floor_db, 20.0 * std::log10(mag));
    }

    std::vector<em::FieldSample> total_pattern(const em::PatternGrid &patterns, std::size_t t,
                                               std::span<const complex> currents)
    {
        if (currents.size() != patterns.ports())
            throw InvalidArgument("pattern grid has " + std::to_string(patterns.ports()) + " ports but " +
                                  std::to_string(currents.size()) + " currents were given");
        std::vector<em::FieldSample> e(patterns.node_count());
        for (std::size_t p = 0; p < currents.size(); ++p)
        {
            const complex i = currents[p];
            if (i == complex{})
                continue;
            const auto field = patterns.port(t, p);
            for (std::size_t k = 0; k < e.size(); ++k)
            {
                e[k].theta += i * field[k].theta;
                e[k].phi += i * field[k].phi;
            }
        }
        return e;
    }
}
