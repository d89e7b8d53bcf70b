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
#ifndef PIXELFAS_EM_FREQUENCY_GRID_HPP
#define PIXELFAS_EM_FREQUENCY_GRID_HPP

#include <cstddef>
#include <vector>

namespace pixelfas::em
{
    // T uniformly spaced design frequencies f_t = f_lower + t (f_upper - f_lower) / (T - 1), t = 0..T-1.
    // T = 1 means the single frequency f_lower.
    class FrequencyGrid
    {
    public:
        FrequencyGrid() = default;
        FrequencyGrid(double f_lower_hz, double f_upper_hz, std::size_t count);

        // Single frequency
        static FrequencyGrid single(double f_hz) { return FrequencyGrid(f_hz, f_hz, 1); }

        double lower() const { return lower_; }
        double upper() const { return upper_; }
        std::size_t size() const { return count_; }
        double at(std::size_t t) const;
        std::vector<double> samples() const;

        bool operator==(const FrequencyGrid &) const = default;

    private:
        double lower_ = 0.0;
        double upper_ = 0.0;
        std::size_t count_ = 0;
    };
}

#endif
