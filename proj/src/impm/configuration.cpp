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
#include "pixelfas/impm/configuration.hpp"
#include "pixelfas/impm/switch_model.hpp"

#include "pixelfas/error.hpp"

#include <cmath>
#include <numbers>
#include <set>

namespace pixelfas::impm
{
    void PixelConfiguration::validate() const
    {
        const std::size_t q = hardwire.size();
        if (q == 0)
            throw InvalidArgument("configuration has no internal ports");
        if (switch_positions.size() >= q)
            throw InvalidArgument("configuration needs fewer switches than internal ports");
        if (switch_bits.size() != switch_positions.size())
            throw InvalidArgument("configuration has " + std::to_string(switch_bits.size()) + " switch bits for " +
                                  std::to_string(switch_positions.size()) + " switches");
        if (switch_positions.size() >= 64)
            throw InvalidArgument("at most 63 switches are supported");
        std::set<std::size_t> seen;
        for (std::size_t s : switch_positions)
        {
            if (s < 1 || s > q)
                throw InvalidArgument("switch position " + std::to_string(s) + " outside 1.." + std::to_string(q));
            if (!seen.insert(s).second)
                throw InvalidArgument("switch position " + std::to_string(s) + " listed twice");
        }
        for (auto b : hardwire)
            if (b > 1)
                throw InvalidArgument("hardwire entries must be 0 or 1");
        for (auto b : switch_bits)
            if (b > 1)
                throw InvalidArgument("switch bits must be 0 or 1");
    }

    PixelConfiguration PixelConfiguration::with_state(std::uint64_t state) const
    {
        PixelConfiguration c = *this;
        c.switch_bits.assign(switch_positions.size(), 0);
        for (std::size_t p = 0; p < switch_positions.size(); ++p)
            c.switch_bits[p] = std::uint8_t((state >> p) & 1u);
        return c;
    }

    std::uint64_t PixelConfiguration::state_index() const
    {
        std::uint64_t s = 0;
        for (std::size_t p = 0; p < switch_bits.size(); ++p)
            s |= std::uint64_t(switch_bits[p] & 1u) << p;
        return s;
    }

    std::string PixelConfiguration::id() const
    {
        std::string s = "S=[";
        for (std::size_t p = 0; p < switch_positions.size(); ++p)
            s += (p ? "," : "") + std::to_string(switch_positions[p]);
        s += "] x=";
        for (auto b : hardwire)
            s += char('0' + b);
        s += " bits=";
        for (auto b : switch_bits)
            s += char('0' + b);
        return s;
    }

    void Branch::validate() const
    {
        if (!resistance_ohm && !inductance_h && !capacitance_f)
            throw InvalidArgument("switch branch has no elements");
        if (resistance_ohm && !(*resistance_ohm >= 0.0 && std::isfinite(*resistance_ohm)))
            throw InvalidArgument("switch branch resistance must be finite and >= 0");
        if (inductance_h && !(*inductance_h >= 0.0 && std::isfinite(*inductance_h)))
            throw InvalidArgument("switch branch inductance must be finite and >= 0");
        if (capacitance_f && !(*capacitance_f > 0.0 && std::isfinite(*capacitance_f)))
            throw InvalidArgument("switch branch capacitance must be finite and > 0");
    }

    complex Branch::impedance(double frequency_hz) const
    {
        validate();
        const double w = 2.0 * std::numbers::pi * frequency_hz;
        if (topology == Topology::series)
        {
            complex z{};
            if (resistance_ohm)
                z += *resistance_ohm;
            if (inductance_h)
                z += complex(0.0, w * *inductance_h);
            if (capacitance_f)
                z += complex(0.0, -1.0 / (w * *capacitance_f));
            return z;
        }
        // A zero-impedance element shorts the whole parallel combination.
        if ((resistance_ohm && *resistance_ohm == 0.0) || (inductance_h && *inductance_h == 0.0))
            return {};
        complex y{};
        if (resistance_ohm)
            y += 1.0 / *resistance_ohm;
        if (inductance_h)
            y += complex(0.0, -1.0 / (w * *inductance_h));
        if (capacitance_f)
            y += complex(0.0, w * *capacitance_f);
        if (y == complex{})
            throw InvalidArgument("parallel switch branch resonates to an open circuit at " +
                                  std::to_string(frequency_hz) + " Hz");
        return 1.0 / y;
    }
}
