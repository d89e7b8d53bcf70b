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
#include "pixelfas/pcdm/covariance.hpp"

#include "pixelfas/error.hpp"
#include "pixelfas/hash.hpp"
#include "pixelfas/numerics/bessel.hpp"

#include <algorithm>
#include <limits>
#include <cmath>
#include <numbers>

namespace pixelfas::pcdm
{
    using numerics::complex;

    namespace
    {
        // sqrt(w * S) per node, so that K = A^H A with A the scaled fields.
        std::vector<double> root_weights(const numerics::QuadratureGrid &grid, const em::PowerAngularSpectrum &pas)
        {
            if (pas.level < 0.0 || !std::isfinite(pas.level))
                throw InvalidArgument("power angular spectrum must be finite and nonnegative");
            std::vector<double> r(grid.size());
            for (std::size_t k = 0; k < grid.size(); ++k)
                r[k] = std::sqrt(grid.weights[k] * pas.density(grid.nodes[k]));
            return r;
        }

        complex inner(std::span<const em::FieldSample> a, std::span<const em::FieldSample> b,
                      const std::vector<double> &rw)
        {
            complex s{};
            for (std::size_t k = 0; k < rw.size(); ++k)
            {
                const double w = rw[k] * rw[k];
                s += w * (std::conj(a[k].theta) * b[k].theta + std::conj(a[k].phi) * b[k].phi);
            }
            return s;
        }

        // rho from a Hermitian Gram matrix; upper triangle computed and mirrored.
        RealMatrix normalize(const ComplexMatrix &c)
        {
            const std::size_t m = c.rows();
            std::vector<double> energy(m);
            for (std::size_t i = 0; i < m; ++i)
            {
                energy[i] = c(i, i).real();
                if (!(energy[i] > 0.0) || !std::isfinite(energy[i]))
                    throw DegenerateStateError(i + 1);
            }
            RealMatrix rho(m, m);
            for (std::size_t i = 0; i < m; ++i)
            {
                rho(i, i) = 1.0;
                for (std::size_t j = i + 1; j < m; ++j)
                {
                    const double g = std::sqrt(energy[i] * energy[j]);
                    rho(i, j) = rho(j, i) = std::abs(c(i, j)) / g;
                }
            }
            return rho;
        }
    }

    double CovarianceMatrix::invariant_violation() const
    {
        double worst = 0.0;
        const std::size_t m = rho.rows();
        if (rho.cols() != m)
            return std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < m; ++i)
        {
            worst = std::max(worst, std::abs(rho(i, i) - 1.0));
            for (std::size_t j = 0; j < m; ++j)
            {
                const double v = rho(i, j);
                if (!std::isfinite(v))
                    return std::numeric_limits<double>::infinity();
                worst = std::max({worst, std::abs(v - rho(j, i)), v - 1.0, -v});
            }
        }
        return worst;
    }

    std::uint64_t kernel_key(const em::PatternGrid &patterns, const em::PowerAngularSpectrum &pas)
    {
        Fnv1a h;
        const auto &grid = patterns.grid();
        h.update_value(grid.support);
        h.update_value(grid.resolution.theta_nodes);
        h.update_value(grid.resolution.phi_nodes);
        h.update_span(std::span<const numerics::Direction>(grid.nodes));
        h.update_span(std::span<const double>(grid.weights));
        h.update_value(pas.support);
        h.update_value(pas.level);
        h.update_span(std::span<const double>(patterns.frequencies()));
        h.update_value(patterns.ports());
        for (std::size_t t = 0; t < patterns.frequency_count(); ++t)
            for (std::size_t p = 0; p < patterns.ports(); ++p)
                h.update_span(patterns.port(t, p));
        return h.digest();
    }

    PatternKernel compute_kernel(const em::PatternGrid &patterns, const em::PowerAngularSpectrum &pas,
                                 const numerics::QuadratureGrid &grid)
    {
        if (grid.support != patterns.grid().support || !grid.same_nodes(patterns.grid()) ||
            grid.weights != patterns.grid().weights)
            throw InvalidArgument("compute_kernel: quadrature grid differs from the pattern grid");
        return compute_kernel(patterns, pas);
    }

    PatternKernel compute_kernel(const em::PatternGrid &patterns, const em::PowerAngularSpectrum &pas)
    {
        const auto &grid = patterns.grid();
        const auto rw = root_weights(grid, pas);
        const std::size_t ports = patterns.ports();
        const std::size_t nodes = grid.size();

        PatternKernel kernel;
        kernel.frequencies_hz = patterns.frequencies();
        kernel.pas = pas;
        kernel.grid_support = grid.support;
        kernel.resolution = grid.resolution;
        kernel.content_hash = kernel_key(patterns, pas);

        std::vector<complex> scaled(ports * 2 * nodes);
        for (std::size_t t = 0; t < patterns.frequency_count(); ++t)
        {
            for (std::size_t p = 0; p < ports; ++p)
            {
                const auto f = patterns.port(t, p);
                complex *row = scaled.data() + p * 2 * nodes;
                for (std::size_t k = 0; k < nodes; ++k)
                {
                    row[k] = rw[k] * f[k].theta;
                    row[nodes + k] = rw[k] * f[k].phi;
                }
            }
            ComplexMatrix k(ports, ports);
            for (std::size_t p = 0; p < ports; ++p)
            {
                const complex *a = scaled.data() + p * 2 * nodes;
                for (std::size_t q = p; q < ports; ++q)
                {
                    const complex *b = scaled.data() + q * 2 * nodes;
                    double re = 0.0, im = 0.0;
                    for (std::size_t n = 0; n < 2 * nodes; ++n)
                    {
                        // conj(a) * b
                        re += a[n].real() * b[n].real() + a[n].imag() * b[n].imag();
                        im += a[n].real() * b[n].imag() - a[n].imag() * b[n].real();
                    }
                    if (p == q)
                        im = 0.0;
                    k(p, q) = complex(re, im);
                    k(q, p) = complex(re, -im);
                }
            }
            kernel.k.push_back(std::move(k));
        }
        return kernel;
    }

    std::shared_ptr<const PatternKernel> KernelCache::get(const em::PatternGrid &patterns,
                                                          const em::PowerAngularSpectrum &pas)
    {
        const auto key = kernel_key(patterns, pas);
        {
            std::lock_guard lock(mutex_);
            if (auto it = kernels_.find(key); it != kernels_.end())
                return it->second;
        }
        auto kernel = std::make_shared<const PatternKernel>(compute_kernel(patterns, pas));
        std::lock_guard lock(mutex_);
        return kernels_.emplace(key, std::move(kernel)).first->second;
    }

    std::size_t KernelCache::size() const
    {
        std::lock_guard lock(mutex_);
        return kernels_.size();
    }

    CovarianceMatrix covariance_from_currents(const PatternKernel &kernel, std::size_t t, const ComplexMatrix &currents)
    {
        if (t >= kernel.k.size())
            throw InvalidArgument("covariance_from_currents: frequency sample out of range");
        const auto &k = kernel.k[t];
        if (currents.rows() != k.rows())
            throw InvalidArgument("covariance_from_currents: current vectors have " + std::to_string(currents.rows()) +
                                  " entries, kernel has " + std::to_string(k.rows()) + " ports");
        const std::size_t m = currents.cols();
        const ComplexMatrix ki = numerics::multiply(k, currents);
        ComplexMatrix c(m, m);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i; j < m; ++j)
            {
                complex s{};
                for (std::size_t p = 0; p < currents.rows(); ++p)
                    s += std::conj(currents(p, i)) * ki(p, j);
                c(i, j) = s;
                c(j, i) = std::conj(s);
            }
        return {normalize(c), kernel.frequencies_hz[t]};
    }

    CovarianceMatrix covariance_direct(std::span<const std::vector<em::FieldSample>> state_patterns,
                                       const em::PowerAngularSpectrum &pas, const numerics::QuadratureGrid &grid)
    {
        const auto rw = root_weights(grid, pas);
        const std::size_t m = state_patterns.size();
        for (const auto &p : state_patterns)
            if (p.size() != grid.size())
                throw InvalidArgument("covariance_direct: pattern does not live on the quadrature grid");
        ComplexMatrix c(m, m);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i; j < m; ++j)
            {
                c(i, j) = inner(state_patterns[i], state_patterns[j], rw);
                c(j, i) = std::conj(c(i, j));
            }
        return {normalize(c), 0.0};
    }

    TargetCovariance target_covariance(std::size_t n, double aperture_wavelengths)
    {
        if (n < 2)
            throw InvalidArgument("target covariance needs at least two ports");
        if (!(aperture_wavelengths > 0.0) || !std::isfinite(aperture_wavelengths))
            throw InvalidArgument("aperture must be positive");
        TargetCovariance target{n, aperture_wavelengths, RealMatrix(n, n)};
        for (std::size_t k = 0; k < n; ++k)
        {
            const double v =
                numerics::bessel_j0(2.0 * std::numbers::pi * double(k) * aperture_wavelengths / double(n - 1));
            for (std::size_t i = 0; i + k < n; ++i)
                target.rho(i, i + k) = target.rho(i + k, i) = v;
        }
        return target;
    }

    namespace
    {
        // Sums a[0..len) as (a[0] + a[len-1]) + (a[1] + a[len-2]) + ..., so a reversed sequence
        // produces bit-identical partial sums.
        template <typename At>
        double palindromic_sum(std::size_t len, At at)
        {
            double s = 0.0;
            for (std::size_t i = 0; i < len / 2; ++i)
                s += at(i) + at(len - 1 - i);
            if (len % 2)
                s += at(len / 2);
            return s;
        }
    }

    double average_error_of_submatrices(std::span<const RealMatrix> rho_per_freq, const TargetCovariance &target)
    {
        if (rho_per_freq.empty())
            throw InvalidArgument("average_error: no frequency samples");
        const std::size_t n = target.n;
        double total = 0.0;
        for (const auto &rho : rho_per_freq)
        {
            if (rho.rows() != n || rho.cols() != n)
                throw InvalidArgument("average_error: covariance is not " + std::to_string(n) + "x" + std::to_string(n));
            auto err = [&](std::size_t i, std::size_t j)
            { return std::abs(std::abs(rho(i, j)) - std::abs(target.rho(i, j))); };

            double s = palindromic_sum(n, [&](std::size_t i) { return err(i, i); });
            for (std::size_t k = 1; k < n; ++k)
            {
                const double upper = palindromic_sum(n - k, [&](std::size_t i) { return err(i, i + k); });
                const double lower = palindromic_sum(n - k, [&](std::size_t i) { return err(i + k, i); });
                s += upper + lower;
            }
            total += s;
        }
        return total / (double(rho_per_freq.size()) * double(n) * double(n));
    }

    RealMatrix select(const RealMatrix &rho, std::span<const std::size_t> ordering)
    {
        const std::size_t m = rho.rows();
        const std::size_t n = ordering.size();
        RealMatrix out(n, n);
        for (std::size_t i = 0; i < n; ++i)
        {
            if (ordering[i] < 1 || ordering[i] > m)
                throw InvalidArgument("ordering entry " + std::to_string(ordering[i]) + " outside 1.." +
                                      std::to_string(m));
            for (std::size_t j = 0; j < i; ++j)
                if (ordering[j] == ordering[i])
                    throw InvalidArgument("ordering lists state " + std::to_string(ordering[i]) + " twice");
            for (std::size_t j = 0; j < n; ++j)
                out(i, j) = rho(ordering[i] - 1, ordering[j] - 1);
        }
        return out;
    }

    double average_error(std::span<const CovarianceMatrix> rho_per_freq, const TargetCovariance &target,
                         std::span<const std::size_t> ordering)
    {
        if (ordering.size() != target.n)
            throw InvalidArgument("ordering length differs from the target size");
        std::vector<RealMatrix> sub;
        sub.reserve(rho_per_freq.size());
        for (const auto &c : rho_per_freq)
            sub.push_back(select(c.rho, ordering));
        return average_error_of_submatrices(sub, target);
    }
}
