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
#ifndef PIXELFAS_IMPM_CIRCUIT_HPP
#define PIXELFAS_IMPM_CIRCUIT_HPP

#include "pixelfas/em/frequency_grid.hpp"
#include "pixelfas/em/network.hpp"
#include "pixelfas/em/pattern.hpp"
#include "pixelfas/impm/configuration.hpp"
#include "pixelfas/impm/switch_model.hpp"

#include <span>
#include <string>
#include <vector>

namespace pixelfas::impm
{
    struct Load
    {
        enum class Kind
        {
            short_circuit,
            open_circuit,
            impedance
        };

        Kind kind = Kind::open_circuit;
        complex value{}; // only meaningful for Kind::impedance

        static Load short_circuit() { return {Kind::short_circuit, {}}; }
        static Load open_circuit() { return {Kind::open_circuit, {}}; }
        static Load finite(complex z) { return {Kind::impedance, z}; }

        bool is_open() const { return kind == Kind::open_circuit; }
        complex impedance() const { return kind == Kind::impedance ? value : complex{}; }
        bool operator==(const Load &) const = default;
    };

    // Terminations of every internal port at every frequency sample.
    class LoadMap
    {
    public:
        LoadMap() = default;
        LoadMap(std::size_t internal_ports, std::size_t frequencies, std::string configuration_id = {});

        std::size_t internal_ports() const { return ports_; }
        std::size_t frequency_count() const { return frequencies_; }
        const std::string &configuration_id() const { return id_; }

        // q is 0-based over internal ports (network port q + 1)
        Load &at(std::size_t t, std::size_t q) { return loads_[t * ports_ + q]; }
        const Load &at(std::size_t t, std::size_t q) const { return loads_[t * ports_ + q]; }

    private:
        std::size_t ports_ = 0;
        std::size_t frequencies_ = 0;
        std::string id_;
        std::vector<Load> loads_;
    };

    // Ports outside S: x_q = 1 shorts the port, x_q = 0 leaves it open.
    // Ports in S: switch bit 1 uses the on branch, 0 the off branch, evaluated at each frequency.
    LoadMap build_load_map(const PixelConfiguration &config, const SwitchModel &model,
                           std::span<const double> frequencies_hz);
    LoadMap build_load_map(const PixelConfiguration &config, const SwitchModel &model, const em::FrequencyGrid &freqs);

    // Feed impedance and port currents of one loaded network at one frequency sample.
    struct PortSolution
    {
        complex z_in;
        std::vector<complex> currents; // Q + 1 entries, index 0 is the feed; exactly zero at open ports
    };

    // Z_in = Z_E - Z_EI [Z_I' + Z_L']^-1 Z_IE with open ports removed from the reduced system.
    // Throws SingularMatrixError carrying the configuration id.
    complex input_impedance(const em::MultiportNetwork &net, const LoadMap &loads, std::size_t t);
    std::vector<complex> input_impedance(const em::MultiportNetwork &net, const LoadMap &loads);

    // i_0 = 1 / sqrt(z_in) (principal branch), i_I = -[Z_I' + Z_L']^-1 Z_IE i_0, zeros at open ports.
    PortSolution port_currents(const em::MultiportNetwork &net, const LoadMap &loads, std::size_t t, complex z_in);

    // Both of the above from a single factorization.
    PortSolution solve_ports(const em::MultiportNetwork &net, const LoadMap &loads, std::size_t t);

    // Floor for a perfect match, dB.
    inline constexpr double reflection_floor_db = -120.0;

    // 20 log10 |(z_in - z0) / (z_in + z0)|, never below the floor. Throws InvalidArgument for
    // z0 <= 0 and for z_in == -z0.
    double reflection_coefficient_db(complex z_in, double z0_ohm);

    // Sum over ports of current times open-circuit embedded pattern, both polarizations.
    std::vector<em::FieldSample> total_pattern(const em::PatternGrid &patterns, std::size_t t,
                                               std::span<const complex> currents);
}

#endif
