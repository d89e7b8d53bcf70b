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
#ifndef PIXELFAS_NUMERICS_LINEAR_SOLVE_HPP
#define PIXELFAS_NUMERICS_LINEAR_SOLVE_HPP

#include "pixelfas/numerics/matrix.hpp"

#include <span>
#include <string>
#include <vector>

namespace pixelfas::numerics
{
    // Reciprocal 1-norm condition number below which a system is reported singular.
    inline constexpr double default_rcond_threshold = 1e-13;

    // LU factorization with partial pivoting, P*A = L*U, stored in place.
    class LuDecomposition
    {
    public:
        explicit LuDecomposition(ComplexMatrix a);

        std::size_t dim() const { return lu_.rows(); }

        // True if a pivot vanished exactly.
        bool exactly_singular() const { return exactly_singular_; }

        // Hager/Higham estimate of 1 / (|A|_1 |A^-1|_1). Zero for an exactly singular matrix.
        double rcond() const;

        std::vector<complex> solve(std::span<const complex> b) const;
        ComplexMatrix solve(const ComplexMatrix &b) const;

        // Solves A^H x = b
        std::vector<complex> solve_adjoint(std::span<const complex> b) const;

    private:
        ComplexMatrix lu_;
        std::vector<std::size_t> perm_;
        double norm_one_ = 0.0;
        bool exactly_singular_ = false;
    };

    // Cholesky factorization A = L*L^H of a Hermitian positive definite matrix.
    // Construction reports failure through ok() instead of throwing.
    class CholeskyDecomposition
    {
    public:
        explicit CholeskyDecomposition(const ComplexMatrix &a);

        bool ok() const { return ok_; }
        std::vector<complex> solve(std::span<const complex> b) const;

    private:
        ComplexMatrix l_;
        bool ok_ = false;
    };

    struct SolveOptions
    {
        double rcond_threshold = default_rcond_threshold;
        std::string configuration_id; // reported in SingularMatrixError
    };

    // Solves A X = B. Hermitian positive definite A goes through Cholesky, everything else
    // through pivoted LU. Throws SingularMatrixError when rcond(A) < threshold.
    ComplexMatrix solve_hermitian_or_general(const ComplexMatrix &a, const ComplexMatrix &b,
                                             const SolveOptions &options = {});

    bool is_hermitian(const ComplexMatrix &a, double rel_tol = 0.0);
}

#endif
