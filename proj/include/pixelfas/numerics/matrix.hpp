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
#ifndef PIXELFAS_NUMERICS_MATRIX_HPP
#define PIXELFAS_NUMERICS_MATRIX_HPP

#include "pixelfas/error.hpp"

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace pixelfas::numerics
{
    using complex = std::complex<double>;

    // Dense row-major matrix with value semantics.
    template <typename T>
    class Matrix
    {
    public:
        using value_type = T;

        Matrix() = default;
        Matrix(std::size_t rows, std::size_t cols, T fill = T{})
            : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

        // Row-wise initializer, e.g. Matrix<double>{{1, 2}, {3, 4}}
        Matrix(std::initializer_list<std::initializer_list<T>> rows)
        {
            rows_ = rows.size();
            cols_ = rows_ ? rows.begin()->size() : 0;
            data_.reserve(rows_ * cols_);
            for (const auto &r : rows)
            {
                if (r.size() != cols_)
                    throw InvalidArgument("Matrix: ragged initializer list");
                data_.insert(data_.end(), r.begin(), r.end());
            }
        }

        static Matrix identity(std::size_t n)
        {
            Matrix m(n, n);
            for (std::size_t i = 0; i < n; ++i)
                m(i, i) = T(1);
            return m;
        }

        std::size_t rows() const { return rows_; }
        std::size_t cols() const { return cols_; }
        std::size_t size() const { return data_.size(); }
        bool empty() const { return data_.empty(); }
        bool is_square() const { return rows_ == cols_; }

        T &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
        const T &operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

        std::span<T> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
        std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

        std::span<T> data() { return data_; }
        std::span<const T> data() const { return data_; }

        std::vector<T> column(std::size_t c) const
        {
            std::vector<T> v(rows_);
            for (std::size_t r = 0; r < rows_; ++r)
                v[r] = (*this)(r, c);
            return v;
        }

        Matrix transpose() const
        {
            Matrix t(cols_, rows_);
            for (std::size_t r = 0; r < rows_; ++r)
                for (std::size_t c = 0; c < cols_; ++c)
                    t(c, r) = (*this)(r, c);
            return t;
        }

        bool operator==(const Matrix &) const = default;

    private:
        std::size_t rows_ = 0;
        std::size_t cols_ = 0;
        std::vector<T> data_;
    };

    using ComplexMatrix = Matrix<complex>;
    using RealMatrix = Matrix<double>;

    ComplexMatrix adjoint(const ComplexMatrix &a);
    ComplexMatrix multiply(const ComplexMatrix &a, const ComplexMatrix &b);
    ComplexMatrix subtract(const ComplexMatrix &a, const ComplexMatrix &b);
    ComplexMatrix scale(const ComplexMatrix &a, complex s);

    // Induced norms
    double norm_inf(const ComplexMatrix &a);
    double norm_one(const ComplexMatrix &a);
    double norm_frobenius(const ComplexMatrix &a);

    // True if every entry is finite.
    bool all_finite(const ComplexMatrix &a);
    bool all_finite(const RealMatrix &a);
}

#endif
