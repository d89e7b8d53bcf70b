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
#ifndef PIXELFAS_PCDM_COVARIANCE_HPP
#define PIXELFAS_PCDM_COVARIANCE_HPP

#include "pixelfas/em/pattern.hpp"
#include "pixelfas/numerics/matrix.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <vector>

namespace pixelfas::pcdm
{
    using numerics::ComplexMatrix;
    using numerics::RealMatrix;

    // Correlation matrix of the open-circuit port patterns under a PAS, per frequency sample:
    // K[p][q] = sum over nodes of w * S * (conj(e_theta,p) e_theta,q + conj(e_phi,p) e_phi,q)
    struct PatternKernel
    {
        std::vector<ComplexMatrix> k; // one (Q+1) x (Q+1) matrix per frequency
        std::vector<double> frequencies_hz;
        em::PowerAngularSpectrum pas;
        numerics::PasSupport grid_support = numerics::PasSupport::full_sphere;
        numerics::QuadratureResolution resolution;
        std::uint64_t content_hash = 0; // of the patterns, PAS and grid it was built from

        std::size_t ports() const { return k.empty() ? 0 : k.front().rows(); }
    };

    // Magnitude covariance between states, entries in [0, 1].
    struct CovarianceMatrix
    {
        RealMatrix rho;
        double frequency_hz = 0.0;

        std::size_t size() const { return rho.rows(); }

        // Max deviation from the invariants (symmetry, unit diagonal, entries in [0, 1]).
        double invariant_violation() const;
    };

    // Target covariance of N ports spread over W wavelengths: J0(2 pi |n - n'| W / (N - 1)).
    struct TargetCovariance
    {
        std::size_t n = 0;
        double aperture_wavelengths = 0.0;
        RealMatrix rho; // signed Bessel values; comparisons use magnitudes
    };

    // Throws InvalidArgument when the grid differs from the pattern grid.
    PatternKernel compute_kernel(const em::PatternGrid &patterns, const em::PowerAngularSpectrum &pas,
                                 const numerics::QuadratureGrid &grid);
    PatternKernel compute_kernel(const em::PatternGrid &patterns, const em::PowerAngularSpectrum &pas);

    std::uint64_t kernel_key(const em::PatternGrid &patterns, const em::PowerAngularSpectrum &pas);

    // Kernels keyed by content hash; thread safe.
    class KernelCache
    {
    public:
        std::shared_ptr<const PatternKernel> get(const em::PatternGrid &patterns, const em::PowerAngularSpectrum &pas);
        std::size_t size() const;

    private:
        mutable std::mutex mutex_;
        std::map<std::uint64_t, std::shared_ptr<const PatternKernel>> kernels_;
    };

    // C = I^H K I, G_ij = sqrt(C_ii C_jj), rho = |C / G| elementwise. `currents` is (Q+1) x M.
    // Throws DegenerateStateError for a state with zero energy.
    CovarianceMatrix covariance_from_currents(const PatternKernel &kernel, std::size_t t, const ComplexMatrix &currents);

    // Same quantity by direct quadrature of the state patterns.
    CovarianceMatrix covariance_direct(std::span<const std::vector<em::FieldSample>> state_patterns,
                                       const em::PowerAngularSpectrum &pas, const numerics::QuadratureGrid &grid);

    TargetCovariance target_covariance(std::size_t n, double aperture_wavelengths);

    // Mean over frequencies and N^2 entries of | |rho_t[n][n']| - |target[n][n']| | for N x N matrices.
    // The sum is arranged so that reversing the port order of a symmetric input gives the identical value.
    double average_error_of_submatrices(std::span<const RealMatrix> rho_per_freq, const TargetCovariance &target);

    // Same, selecting rows and columns of each M x M matrix through a 1-based port ordering.
    double average_error(std::span<const CovarianceMatrix> rho_per_freq, const TargetCovariance &target,
                         std::span<const std::size_t> ordering);

    // The N x N submatrix selected by a 1-based ordering.
    RealMatrix select(const RealMatrix &rho, std::span<const std::size_t> ordering);
}

#endif
