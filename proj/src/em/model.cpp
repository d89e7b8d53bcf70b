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
#include "pixelfas/em/frequency_grid.hpp"
#include "pixelfas/em/network.hpp"
#include "pixelfas/em/pattern.hpp"

#include "pixelfas/error.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace pixelfas::em
{
    // ---- FrequencyGrid ----

    FrequencyGrid::FrequencyGrid(double f_lower_hz, double f_upper_hz, std::size_t count)
        : lower_(f_lower_hz), upper_(f_upper_hz), count_(count)
    {
        if (!std::isfinite(f_lower_hz) || !std::isfinite(f_upper_hz) || f_lower_hz <= 0.0)
            throw InvalidArgument("FrequencyGrid: frequencies must be finite and positive");
        if (f_lower_hz > f_upper_hz)
            throw InvalidArgument("FrequencyGrid: f_lower exceeds f_upper");
        if (count == 0)
            throw InvalidArgument("FrequencyGrid: need at least one sample");
        if (count > 1 && f_lower_hz == f_upper_hz)
            throw InvalidArgument("FrequencyGrid: several samples need f_lower < f_upper");
    }

    double FrequencyGrid::at(std::size_t t) const
    {
        if (t >= count_)
            throw InvalidArgument("FrequencyGrid: sample index out of range");
        if (count_ == 1)
            return lower_;
        if (t + 1 == count_)
            return upper_;
        return lower_ + double(t) * (upper_ - lower_) / double(count_ - 1);
    }

    std::vector<double> FrequencyGrid::samples() const
    {
        std::vector<double> s(count_);
        for (std::size_t t = 0; t < count_; ++t)
            s[t] = at(t);
        return s;
    }

    // ---- MultiportNetwork ----

    MultiportNetwork::MultiportNetwork(std::vector<double> frequencies_hz, std::vector<ComplexMatrix> z)
        : frequencies_(std::move(frequencies_hz)), z_(std::move(z))
    {
        if (frequencies_.empty() || frequencies_.size() != z_.size())
            throw InvalidArgument("MultiportNetwork: need one matrix per frequency");
        for (std::size_t t = 0; t < frequencies_.size(); ++t)
        {
            if (!(frequencies_[t] > 0.0) || !std::isfinite(frequencies_[t]))
                throw InvalidArgument("MultiportNetwork: invalid frequency");
            if (t > 0 && !(frequencies_[t] > frequencies_[t - 1]))
                throw InvalidArgument("MultiportNetwork: frequencies must be strictly increasing");
        }
        ports_ = z_.front().rows();
        if (ports_ < 2)
            throw InvalidArgument("MultiportNetwork: need the feed port plus at least one internal port");
        for (const auto &m : z_)
        {
            if (!m.is_square())
                throw InvalidArgument("MultiportNetwork: impedance matrix is not square");
            if (m.rows() != ports_)
                throw InvalidArgument("MultiportNetwork: port count changes between frequencies");
            if (!numerics::all_finite(m))
                throw InvalidArgument("MultiportNetwork: non-finite impedance entry");
        }
    }

    ComplexMatrix MultiportNetwork::z_ei(std::size_t t) const
    {
        const auto &m = z(t);
        ComplexMatrix out(1, internal_ports());
        for (std::size_t q = 0; q < internal_ports(); ++q)
            out(0, q) = m(0, q + 1);
        return out;
    }

    ComplexMatrix MultiportNetwork::z_ie(std::size_t t) const
    {
        const auto &m = z(t);
        ComplexMatrix out(internal_ports(), 1);
        for (std::size_t q = 0; q < internal_ports(); ++q)
            out(q, 0) = m(q + 1, 0);
        return out;
    }

    ComplexMatrix MultiportNetwork::z_i(std::size_t t) const
    {
        const auto &m = z(t);
        const std::size_t nq = internal_ports();
        ComplexMatrix out(nq, nq);
        for (std::size_t r = 0; r < nq; ++r)
            for (std::size_t c = 0; c < nq; ++c)
                out(r, c) = m(r + 1, c + 1);
        return out;
    }

    std::size_t MultiportNetwork::frequency_index(double f_hz, double rel_tol) const
    {
        for (std::size_t t = 0; t < frequencies_.size(); ++t)
            if (std::abs(frequencies_[t] - f_hz) <= rel_tol * std::abs(f_hz))
                return t;
        throw InvalidArgument("network has no sample at " + std::to_string(f_hz) + " Hz");
    }

    double MultiportNetwork::reciprocity_error() const
    {
        double worst = 0.0;
        for (const auto &m : z_)
        {
            const double scale = numerics::norm_inf(m);
            if (scale == 0.0)
                continue;
            worst = std::max(worst, numerics::norm_inf(numerics::subtract(m, m.transpose())) / scale);
        }
        return worst;
    }

    double MultiportNetwork::passivity_margin() const
    {
        double worst = std::numeric_limits<double>::infinity();
        for (const auto &m : z_)
        {
            Eigen::MatrixXd re(ports_, ports_);
            double scale = 0.0;
            for (std::size_t r = 0; r < ports_; ++r)
            {
                double row_sum = 0.0;
                for (std::size_t c = 0; c < ports_; ++c)
                {
                    re(Eigen::Index(r), Eigen::Index(c)) = 0.5 * (m(r, c).real() + m(c, r).real());
                    row_sum += std::abs(m(r, c).real());
                }
                scale = std::max(scale, row_sum);
            }
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(re, Eigen::EigenvaluesOnly);
            const double lo = es.eigenvalues().minCoeff();
            worst = std::min(worst, scale > 0.0 ? lo / scale : lo);
        }
        return worst;
    }

    // ---- PatternGrid ----

    PatternGrid::PatternGrid(numerics::QuadratureGrid grid, std::vector<double> frequencies_hz, std::size_t ports)
        : grid_(std::move(grid)), frequencies_(std::move(frequencies_hz)), ports_(ports)
    {
        if (frequencies_.empty())
            throw InvalidArgument("PatternGrid: need at least one frequency");
        if (ports_ == 0)
            throw InvalidArgument("PatternGrid: need at least one port");
        if (grid_.nodes.size() != grid_.weights.size() || grid_.nodes.empty())
            throw InvalidArgument("PatternGrid: malformed quadrature grid");
        data_.assign(frequencies_.size() * ports_ * grid_.size(), FieldSample{});
    }

    std::span<FieldSample> PatternGrid::port(std::size_t t, std::size_t p)
    {
        if (t >= frequency_count() || p >= ports_)
            throw InvalidArgument("PatternGrid: index out of range");
        return {data_.data() + (t * ports_ + p) * node_count(), node_count()};
    }

    std::span<const FieldSample> PatternGrid::port(std::size_t t, std::size_t p) const
    {
        if (t >= frequency_count() || p >= ports_)
            throw InvalidArgument("PatternGrid: index out of range");
        return {data_.data() + (t * ports_ + p) * node_count(), node_count()};
    }

    bool PatternGrid::all_finite() const
    {
        return std::all_of(data_.begin(), data_.end(), [](const FieldSample &s)
                           { return std::isfinite(s.theta.real()) && std::isfinite(s.theta.imag()) &&
                                    std::isfinite(s.phi.real()) && std::isfinite(s.phi.imag()); });
    }

    bool PatternGrid::operator==(const PatternGrid &other) const
    {
        return grid_.support == other.grid_.support && grid_.resolution == other.grid_.resolution &&
               grid_.same_nodes(other.grid_) && grid_.weights == other.grid_.weights &&
               frequencies_ == other.frequencies_ && ports_ == other.ports_ && data_ == other.data_;
    }

    // ---- PowerAngularSpectrum ----

    bool PowerAngularSpectrum::on_support(const numerics::Direction &d) const
    {
        constexpr double half_pi = 0.5 * std::numbers::pi;
        constexpr double tol = 1e-12;
        switch (support)
        {
        case numerics::PasSupport::full_sphere:
            return true;
        case numerics::PasSupport::upper_hemisphere:
            return d.theta <= half_pi + tol;
        case numerics::PasSupport::horizon_ring:
            return std::abs(d.theta - half_pi) <= tol;
        }
        return false;
    }
}
