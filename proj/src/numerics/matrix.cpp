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
#include "pixelfas/numerics/matrix.hpp"

#include <algorithm>
#include <cmath>

namespace pixelfas::numerics
{
    ComplexMatrix adjoint(const ComplexMatrix &a)
    {
        ComplexMatrix h(a.cols(), a.rows());
        for (std::size_t r = 0; r < a.rows(); ++r)
            for (std::size_t c = 0; c < a.cols(); ++c)
                h(c, r) = std::conj(a(r, c));
        return h;
    }

    ComplexMatrix multiply(const ComplexMatrix &a, const ComplexMatrix &b)
    {
        if (a.cols() != b.rows())
            throw InvalidArgument("multiply: inner dimensions differ");
        ComplexMatrix out(a.rows(), b.cols());
        for (std::size_t i = 0; i < a.rows(); ++i)
        {
            auto out_row = out.row(i);
            for (std::size_t k = 0; k < a.cols(); ++k)
            {
                const complex aik = a(i, k);
                if (aik == complex{})
                    continue;
                auto b_row = b.row(k);
                for (std::size_t j = 0; j < b.cols(); ++j)
                    out_row[j] += aik * b_row[j];
            }
        }
        return out;
    }

    ComplexMatrix subtract(const ComplexMatrix &a, const ComplexMatrix &b)
    {
        if (a.rows() != b.rows() || a.cols() != b.cols())
            throw InvalidArgument("subtract: shapes differ");
        ComplexMatrix out = a;
        auto o = out.data();
        auto bd = b.data();
        for (std::size_t i = 0; i < o.size(); ++i)
            o[i] -= bd[i];
        return out;
    }

    ComplexMatrix scale(const ComplexMatrix &a, complex s)
    {
        ComplexMatrix out = a;
        for (auto &v : out.data())
            v *= s;
        return out;
    }

    double norm_inf(const ComplexMatrix &a)
    {
        double best = 0.0;
        for (std::size_t r = 0; r < a.rows(); ++r)
        {
            double sum = 0.0;
            for (const auto &v : a.row(r))
                sum += std::abs(v);
            best = std::max(best, sum);
        }
        return best;
    }

    double norm_one(const ComplexMatrix &a)
    {
        std::vector<double> sums(a.cols(), 0.0);
        for (std::size_t r = 0; r < a.rows(); ++r)
            for (std::size_t c = 0; c < a.cols(); ++c)
                sums[c] += std::abs(a(r, c));
        return sums.empty() ? 0.0 : *std::max_element(sums.begin(), sums.end());
    }

    double norm_frobenius(const ComplexMatrix &a)
    {
        double sum = 0.0;
        for (const auto &v : a.data())
            sum += std::norm(v);
        return std::sqrt(sum);
    }

    bool all_finite(const ComplexMatrix &a)
    {
        return std::all_of(a.data().begin(), a.data().end(), [](const complex &v)
                           { return std::isfinite(v.real()) && std::isfinite(v.imag()); });
    }

    bool all_finite(const RealMatrix &a)
    {
        return std::all_of(a.data().begin(), a.data().end(), [](double v)
                           { return std::isfinite(v); });
    }
}
