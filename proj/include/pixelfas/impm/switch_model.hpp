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
#ifndef PIXELFAS_IMPM_SWITCH_MODEL_HPP
#define PIXELFAS_IMPM_SWITCH_MODEL_HPP

#include "pixelfas/numerics/matrix.hpp"

#include <optional>

namespace pixelfas::impm
{
    using numerics::complex;

    // Two-terminal R/L/C network with its elements either all in series or all in parallel.
    // Absent elements are left out of the circuit.
    struct Branch
    {
        enum class Topology
        {
            series,
            parallel
        };

        Topology topology = Topology::series;
        std::optional<double> resistance_ohm;
        std::optional<double> inductance_h;
        std::optional<double> capacitance_f;

        // Throws InvalidArgument unless at least one element is present, R >= 0, L >= 0, C > 0.
        void validate() const;

        complex impedance(double frequency_hz) const;
    };

    // Equivalent circuit of an RF switch in its conducting and blocking states.
    struct SwitchModel
    {
        Branch on;
        Branch off;

        void validate() const
        {
            on.validate();
            off.validate();
        }
    };
}

#endif
