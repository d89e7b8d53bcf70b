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
#include "pixelfas/numerics/quadrature.hpp"

#include "pixelfas/error.hpp"

#include <cmath>
#include <numbers>

namespace pixelfas::numerics
{
    std::string to_string(PasSupport support)
    {
        switch (support)
        {
        case PasSupport::full_sphere:
            return "full-sphere";
        case PasSupport::upper_hemisphere:
            return "upper-hemisphere";
        case PasSupport::horizon_ring:
            return "horizon-ring";
        }
        throw InvalidArgument("unknown PAS support");
    }

    PasSupport pas_support_from_string(std::string_view name)
    {
        if (name == "full-sphere")
            return PasSupport::full_sphere;
        if (name == "upper-hemisphere")
            return PasSupport::upper_hemisphere;
        if (name == "horizon-ring")
            return PasSupport::horizon_ring;
        throw InvalidArgument("unknown PAS support '" + std::string(name) +
                              "' (expected full-sphere, upper-hemisphere or horizon-ring)");
    }

    double support_measure(PasSupport support)
    {
        constexpr double two_pi = 2.0 * std::numbers::pi;
        switch (support)
        {
        case PasSupport::full_sphere:
            return 2.0 * two_pi;
        case PasSupport::upper_hemisphere:
        case PasSupport::horizon_ring:
            return two_pi;
        }
        throw InvalidArgument("unknown PAS support");
    }

    std::pair<std::vector<double>, std::vector<double>> gauss_legendre(std::size_t n)
    {
        if (n == 0)
            throw InvalidArgument("gauss_legendre: need at least one node");
        std::vector<double> x(n), w(n);
        const std::size_t half = (n + 1) / 2;
        for (std::size_t i = 0; i < half; ++i)
        {
            double z = std::cos(std::numbers::pi * (double(i) + 0.75) / (double(n) + 0.5));
            double dp = 0.0;
            for (int iter = 0; iter < 100; ++iter)
            {
                double p0 = 1.0, p1 = z;
                for (std::size_t k = 2; k <= n; ++k)
                {
                    const double p2 = ((2.0 * double(k) - 1.0) * z * p1 - (double(k) - 1.0) * p0) / double(k);
                    p0 = p1;
                    p1 = p2;
                }
                dp = double(n) * (z * p1 - p0) / (z * z - 1.0);
                const double dz = p1 / dp;
                z -= dz;
                if (std::abs(dz) < 1e-16)
                    break;
            }
            // Recompute the derivative at the converged node for the weight.
            double p0 = 1.0, p1 = z;
            for (std::size_t k = 2; k <= n; ++k)
            {
                const double p2 = ((2.0 * double(k) - 1.0) * z * p1 - (double(k) - 1.0) * p0) / double(k);
                p0 = p1;
                p1 = p2;
            }
            dp = double(n) * (z * p1 - p0) / (z * z - 1.0);
            const double wi = 2.0 / ((1.0 - z * z) * dp * dp);
            x[i] = -z;
            x[n - 1 - i] = z;
            w[i] = wi;
            w[n - 1 - i] = wi;
        }
        if (n % 2 == 1)
            x[n / 2] = 0.0;
        return {x, w};
    }

    QuadratureGrid build_quadrature(PasSupport support, QuadratureResolution resolution)
    {
        constexpr double two_pi = 2.0 * std::numbers::pi;
        QuadratureGrid grid;
        grid.support = support;
        grid.resolution = resolution;

        const std::size_t nphi = resolution.phi_nodes;
        if (nphi < 2)
            throw InvalidArgument("build_quadrature: need at least 2 phi nodes");
        const double dphi = two_pi / double(nphi);

        if (support == PasSupport::horizon_ring)
        {
            grid.resolution.theta_nodes = 1;
            grid.nodes.reserve(nphi);
            for (std::size_t j = 0; j < nphi; ++j)
            {
                grid.nodes.push_back({0.5 * std::numbers::pi, dphi * double(j)});
                grid.weights.push_back(dphi);
            }
            return grid;
        }

        if (support != PasSupport::full_sphere && support != PasSupport::upper_hemisphere)
            throw InvalidArgument("build_quadrature: unknown PAS support");

        const std::size_t nth = resolution.theta_nodes;
        if (nth < 2)
            throw InvalidArgument("build_quadrature: need at least 2 theta nodes");
        auto [mu, wmu] = gauss_legendre(nth);
        if (support == PasSupport::upper_hemisphere)
        {
            for (std::size_t i = 0; i < nth; ++i)
            {
                mu[i] = 0.5 * (mu[i] + 1.0);
                wmu[i] *= 0.5;
            }
        }

        grid.nodes.reserve(nth * nphi);
        grid.weights.reserve(nth * nphi);
        // Descending mu gives ascending theta.
        for (std::size_t i = nth; i-- > 0;)
        {
            const double theta = std::acos(mu[i]);
            for (std::size_t j = 0; j < nphi; ++j)
            {
                grid.nodes.push_back({theta, dphi * double(j)});
                grid.weights.push_back(wmu[i] * dphi);
            }
        }
        return grid;
    }

    bool QuadratureGrid::same_nodes(const QuadratureGrid &other, double tol) const
    {
        if (nodes.size() != other.nodes.size())
            return false;
        for (std::size_t i = 0; i < nodes.size(); ++i)
        {
            if (std::abs(nodes[i].theta - other.nodes[i].theta) > tol ||
                std::abs(nodes[i].phi - other.nodes[i].phi) > tol)
                return false;
        }
        return true;
    }
}
