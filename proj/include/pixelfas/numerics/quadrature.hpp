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
#ifndef PIXELFAS_NUMERICS_QUADRATURE_HPP
#define PIXELFAS_NUMERICS_QUADRATURE_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pixelfas::numerics
{
    // Angular region on which the incident power is spread.
    enum class PasSupport
    {
        full_sphere,
        upper_hemisphere, // polar angle theta in [0, pi/2]
        horizon_ring      // theta = pi/2, phi in [0, 2 pi)
    };

    std::string to_string(PasSupport support);
    PasSupport pas_support_from_string(std::string_view name); // throws InvalidArgument

    // Solid measure of the support (ring: circumference 2 pi).
    double support_measure(PasSupport support);

    struct QuadratureResolution
    {
        std::size_t theta_nodes = 64; // unused for the ring
        std::size_t phi_nodes = 128;
        bool operator==(const QuadratureResolution &) const = default;
    };

    struct Direction
    {
        double theta; // polar angle from zenith, radians
        double phi;   // azimuth, radians
    };

    // Product rule: Gauss-Legendre in cos(theta) times uniform trapezoid in phi.
    // Nodes are ordered theta-major (all phi for the first theta, then the next theta).
    struct QuadratureGrid
    {
        PasSupport support = PasSupport::full_sphere;
        QuadratureResolution resolution;
        std::vector<Direction> nodes;
        std::vector<double> weights;

        std::size_t size() const { return nodes.size(); }
        bool same_nodes(const QuadratureGrid &other, double tol = 0.0) const;
    };

    QuadratureGrid build_quadrature(PasSupport support, QuadratureResolution resolution = {});

    // Gauss-Legendre nodes and weights on [-1, 1], nodes ascending.
    std::pair<std::vector<double>, std::vector<double>> gauss_legendre(std::size_t n);
}

#endif
