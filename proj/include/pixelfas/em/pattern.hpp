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
#ifndef PIXELFAS_EM_PATTERN_HPP
#define PIXELFAS_EM_PATTERN_HPP

#include "pixelfas/numerics/matrix.hpp"
#include "pixelfas/numerics/quadrature.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace pixelfas::em
{
    using numerics::complex;

    // Far-field polarization components at one direction.
    struct FieldSample
    {
        complex theta;
        complex phi;
        bool operator==(const FieldSample &) const = default;
    };

    // Open-circuit embedded far fields of every port on a common angular grid, per frequency.
    class PatternGrid
    {
    public:
        PatternGrid() = default;
        PatternGrid(numerics::QuadratureGrid grid, std::vector<double> frequencies_hz, std::size_t ports);

        std::size_t ports() const { return ports_; }
        std::size_t frequency_count() const { return frequencies_.size(); }
        std::size_t node_count() const { return grid_.size(); }
        const std::vector<double> &frequencies() const { return frequencies_; }
        const numerics::QuadratureGrid &grid() const { return grid_; }

        std::span<FieldSample> port(std::size_t t, std::size_t p);
        std::span<const FieldSample> port(std::size_t t, std::size_t p) const;

        bool all_finite() const;
        bool operator==(const PatternGrid &other) const;

    private:
        numerics::QuadratureGrid grid_;
        std::vector<double> frequencies_;
        std::size_t ports_ = 0;
        std::vector<FieldSample> data_; // [t][p][node]
    };

    // Power angular spectrum: constant level on the support, zero elsewhere.
    struct PowerAngularSpectrum
    {
        numerics::PasSupport support = numerics::PasSupport::upper_hemisphere;
        double level = 1.0;

        bool on_support(const numerics::Direction &d) const;
        double density(const numerics::Direction &d) const { return on_support(d) ? level : 0.0; }
    };
}

#endif
