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
#include "pixelfas/numerics/linear_solve.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace pixelfas::numerics
{
    LuDecomposition::LuDecomposition(ComplexMatrix a)
        : lu_(std::move(a))
    {
        if (!lu_.is_square())
            throw InvalidArgument("LuDecomposition: matrix is not square");
        if (!all_finite(lu_))
            throw InvalidArgument("LuDecomposition: matrix has non-finite entries");

        const std::size_t n = lu_.rows();
        norm_one_ = norm_one(lu_);
        perm_.resize(n);
        std::iota(perm_.begin(), perm_.end(), std::size_t{0});

        for (std::size_t k = 0; k < n; ++k)
        {
            std::size_t p = k;
            double best = std::abs(lu_(k, k));
            for (std::size_t i = k + 1; i < n; ++i)
            {
                const double v = std::abs(lu_(i, k));
                if (v > best)
                {
                    best = v;
                    p = i;
                }
            }
            if (best == 0.0)
            {
                exactly_singular_ = true;
                continue;
            }
            if (p != k)
            {
                std::swap_ranges(lu_.row(k).begin(), lu_.row(k).end(), lu_.row(p).begin());
                std::swap(perm_[k], perm_[p]);
            }
            const complex pivot = lu_(k, k);
            for (std::size_t i = k + 1; i < n; ++i)
            {
                complex &lik = lu_(i, k);
                if (lik == complex{})
                    continue;
                lik /= pivot;
                auto row_i = lu_.row(i);
                auto row_k = lu_.row(k);
                for (std::size_t j = k + 1; j < n; ++j)
                    row_i[j] -= lik * row_k[j];
            }
        }
    }

    std::vector<complex> LuDecomposition::solve(std::span<const complex> b) const
    {
        const std::size_t n = dim();
        if (b.size() != n)
            throw InvalidArgument("LuDecomposition::solve: right-hand side has wrong length");
        std::vector<complex> x(n);
        for (std::size_t i = 0; i < n; ++i)
            x[i] = b[perm_[i]];
        for (std::size_t i = 0; i < n; ++i)
        {
            complex s = x[i];
            for (std::size_t j = 0; j < i; ++j)
                s -= lu_(i, j) * x[j];
            x[i] = s;
        }
        for (std::size_t i = n; i-- > 0;)
        {
            complex s = x[i];
            for (std::size_t j = i + 1; j < n; ++j)
                s -= lu_(i, j) * x[j];
            x[i] = s / lu_(i, i);
        }
        return x;
    }

    std::vector<complex> LuDecomposition::solve_adjoint(std::span<const complex> b) const
    {
        // A^H = U^H L^H P
        const std::size_t n = dim();
        if (b.size() != n)
            throw InvalidArgument("LuDecomposition::solve_adjoint: right-hand side has wrong length");
        std::vector<complex> w(b.begin(), b.end());
        for (std::size_t i = 0; i < n; ++i)
        {
            complex s = w[i];
            for (std::size_t j = 0; j < i; ++j)
                s -= std::conj(lu_(j, i)) * w[j];
            w[i] = s / std::conj(lu_(i, i));
        }
        for (std::size_t i = n; i-- > 0;)
        {
            complex s = w[i];
            for (std::size_t j = i + 1; j < n; ++j)
                s -= std::conj(lu_(j, i)) * w[j];
            w[i] = s;
        }
        std::vector<complex> x(n);
        for (std::size_t i = 0; i < n; ++i)
            x[perm_[i]] = w[i];
        return x;
    }

    ComplexMatrix LuDecomposition::solve(const ComplexMatrix &b) const
    {
        if (b.rows() != dim())
            throw InvalidArgument("LuDecomposition::solve: right-hand side has wrong row count");
        ComplexMatrix x(b.rows(), b.cols());
        for (std::size_t c = 0; c < b.cols(); ++c)
        {
            const auto col = b.column(c);
            const auto sol = solve(col);
            for (std::size_t r = 0; r < b.rows(); ++r)
                x(r, c) = sol[r];
        }
        return x;
    }

    double LuDecomposition::rcond() const
    {
        const std::size_t n = dim();
        if (n == 0)
            return 1.0;
        if (exactly_singular_ || norm_one_ == 0.0)
            return 0.0;

        auto norm1 = [](const std::vector<complex> &v)
        {
            double s = 0.0;
            for (const auto &x : v)
                s += std::abs(x);
            return s;
        };

        std::vector<complex> x(n, complex(1.0 / double(n), 0.0));
        double estimate = 0.0;
        for (int iter = 0; iter < 5; ++iter)
        {
            const auto y = solve(x);
            const double ny = norm1(y);
            if (iter > 0 && ny <= estimate)
                break;
            estimate = ny;
            std::vector<complex> sign(n);
            for (std::size_t i = 0; i < n; ++i)
            {
                const double a = std::abs(y[i]);
                sign[i] = a > 0.0 ? y[i] / a : complex(1.0, 0.0);
            }
            const auto z = solve_adjoint(sign);
            std::size_t j = 0;
            double zmax = -1.0;
            for (std::size_t i = 0; i < n; ++i)
                if (std::abs(z[i]) > zmax)
                {
                    zmax = std::abs(z[i]);
                    j = i;
                }
            complex ztx{};
            for (std::size_t i = 0; i < n; ++i)
                ztx += std::conj(z[i]) * x[i];
            if (iter > 0 && zmax <= ztx.real())
                break;
            std::fill(x.begin(), x.end(), complex{});
            x[j] = 1.0;
        }

        // Higham's alternating-sign safeguard
        std::vector<complex> alt(n);
        for (std::size_t i = 0; i < n; ++i)
        {
            const double mag = n > 1 ? 1.0 + double(i) / double(n - 1) : 1.0;
            alt[i] = (i % 2 == 0) ? mag : -mag;
        }
        estimate = std::max(estimate, 2.0 * norm1(solve(alt)) / (3.0 * double(n)));

        if (!std::isfinite(estimate) || estimate == 0.0)
            return 0.0;
        return 1.0 / (norm_one_ * estimate);
    }

    CholeskyDecomposition::CholeskyDecomposition(const ComplexMatrix &a)
        : l_(a.rows(), a.cols())
    {
        if (!a.is_square())
            return;
        const std::size_t n = a.rows();
        for (std::size_t j = 0; j < n; ++j)
        {
            double d = a(j, j).real();
            for (std::size_t k = 0; k < j; ++k)
                d -= std::norm(l_(j, k));
            if (!(d > 0.0))
                return;
            const double ljj = std::sqrt(d);
            l_(j, j) = ljj;
            for (std::size_t i = j + 1; i < n; ++i)
            {
                complex s = a(i, j);
                for (std::size_t k = 0; k < j; ++k)
                    s -= l_(i, k) * std::conj(l_(j, k));
                l_(i, j) = s / ljj;
            }
        }
        ok_ = true;
    }

    std::vector<complex> CholeskyDecomposition::solve(std::span<const complex> b) const
    {
        const std::size_t n = l_.rows();
        std::vector<complex> y(b.begin(), b.end());
        for (std::size_t i = 0; i < n; ++i)
        {
            complex s = y[i];
            for (std::size_t k = 0; k < i; ++k)
                s -= l_(i, k) * y[k];
            y[i] = s / l_(i, i);
        }
        for (std::size_t i = n; i-- > 0;)
        {
            complex s = y[i];
            for (std::size_t k = i + 1; k < n; ++k)
                s -= std::conj(l_(k, i)) * y[k];
            y[i] = s / l_(i, i);
        }
        return y;
    }

    bool is_hermitian(const ComplexMatrix &a, double rel_tol)
    {
        if (!a.is_square())
            return false;
        const double tol = rel_tol * norm_inf(a);
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t j = i; j < a.cols(); ++j)
                if (std::abs(a(i, j) - std::conj(a(j, i))) > tol)
                    return false;
        return true;
    }

    ComplexMatrix solve_hermitian_or_general(const ComplexMatrix &a, const ComplexMatrix &b,
                                             const SolveOptions &options)
    {
        if (!a.is_square())
            throw InvalidArgument("solve: coefficient matrix is not square");
        if (b.rows() != a.rows())
            throw InvalidArgument("solve: right-hand side is not conformable");

        LuDecomposition lu(a);
        const double rc = lu.rcond();
        if (!(rc >= options.rcond_threshold))
            throw SingularMatrixError(options.configuration_id, rc);

        if (is_hermitian(a))
        {
            CholeskyDecomposition chol(a);
            if (chol.ok())
            {
                ComplexMatrix x(b.rows(), b.cols());
                for (std::size_t c = 0; c < b.cols(); ++c)
                {
                    const auto sol = chol.solve(b.column(c));
                    for (std::size_t r = 0; r < b.rows(); ++r)
                        x(r, c) = sol[r];
                }
                return x;
            }
        }
        return lu.solve(b);
    }
}
