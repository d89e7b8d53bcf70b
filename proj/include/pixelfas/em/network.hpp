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
#ifndef PIXELFAS_EM_NETWORK_HPP
#define PIXELFAS_EM_NETWORK_HPP

#include "pixelfas/em/frequency_grid.hpp"
#include "pixelfas/numerics/matrix.hpp"

#include <cstddef>
#include <vector>

namespace pixelfas::em
{
    using numerics::complex;
    using numerics::ComplexMatrix;

    // (Q+1)-port impedance model of the antenna, one matrix per frequency sample.
    // Port 0 is the external feed, ports 1..Q are the internal (pixel connection) ports.
    class MultiportNetwork
    {
    public:
        MultiportNetwork() = default;

        // Frequencies must be strictly increasing and every matrix square with a common size >= 2.
        MultiportNetwork(std::vector<double> frequencies_hz, std::vector<ComplexMatrix> z);

        std::size_t ports() const { return ports_; }
        std::size_t internal_ports() const { return ports_ ? ports_ - 1 : 0; }
        std::size_t frequency_count() const { return frequencies_.size(); }
        const std::vector<double> &frequencies() const { return frequencies_; }

        const ComplexMatrix &z(std::size_t t) const { return z_.at(t); }

        // Partition accessors
        complex z_e(std::size_t t) const { return z(t)(0, 0); }
        ComplexMatrix z_ei(std::size_t t) const; // 1 x Q
        ComplexMatrix z_ie(std::size_t t) const; // Q x 1
        ComplexMatrix z_i(std::size_t t) const;  // Q x Q

        // Index of the sample matching f within a relative tolerance, throws InvalidArgument otherwise.
        std::size_t frequency_index(double f_hz, double rel_tol = 1e-9) const;

        // |Z - Z^T|_inf / |Z|_inf, worst over frequencies.
        double reciprocity_error() const;

        // Minimum eigenvalue of (Re Z + Re Z^T)/2 divided by |Re Z|_inf, worst over frequencies.
        double passivity_margin() const;

        bool operator==(const MultiportNetwork &) const = default;

    private:
        std::size_t ports_ = 0;
        std::vector<double> frequencies_;
        std::vector<ComplexMatrix> z_;
    };
}

#endif
