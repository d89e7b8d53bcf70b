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
#include "pixelfas/em/surrogate.hpp"

#include "pixelfas/error.hpp"
#include "pixelfas/random.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <numbers>

namespace pixelfas::em
{
    namespace
    {
        constexpr double speed_of_light = 299792458.0;

        FieldSample elementary_dipole(bool x_directed, const numerics::Direction &d)
        {
            const double ct = std::cos(d.theta), cp = std::cos(d.phi), sp = std::sin(d.phi);
            if (x_directed)
                return {complex(ct * cp, 0.0), complex(-sp, 0.0)};
            return {complex(ct * sp, 0.0), complex(cp, 0.0)};
        }
    }

    PatternGrid synth_dipole_translations(std::size_t n, double aperture_wavelengths,
                                          const numerics::QuadratureGrid &grid, double frequency_hz)
    {
        if (n < 2)
            throw InvalidArgument("synth_dipole_translations: need at least two ports");
        if (!(aperture_wavelengths > 0.0) || !std::isfinite(aperture_wavelengths))
            throw InvalidArgument("synth_dipole_translations: aperture must be positive");
        PatternGrid patterns(grid, {frequency_hz}, n);
        const double step = 2.0 * std::numbers::pi * aperture_wavelengths / double(n - 1);
        for (std::size_t p = 0; p < n; ++p)
        {
            auto field = patterns.port(0, p);
            for (std::size_t k = 0; k < grid.size(); ++k)
            {
                const auto &d = grid.nodes[k];
                const double phase = step * double(p) * std::cos(d.phi);
                field[k] = {std::sin(d.theta) * std::polar(1.0, phase), complex(0.0, 0.0)};
            }
        }
        return patterns;
    }

    PixelLayout make_pixel_layout(std::size_t q, double pitch_m)
    {
        if (q == 0)
            throw InvalidArgument("make_pixel_layout: need at least one internal port");
        if (!(pitch_m > 0.0))
            throw InvalidArgument("make_pixel_layout: pitch must be positive");
        std::size_t side = 2;
        while (2 * side * (side - 1) < q)
            ++side;

        PixelLayout layout;
        layout.side = side;
        layout.pitch_m = pitch_m;
        layout.sites.push_back({0.0, 0.0, true});
        const double half = 0.5 * double(side - 1);
        for (std::size_t row = 0; row < side; ++row)
            for (std::size_t col = 0; col + 1 < side; ++col)
                layout.sites.push_back({(double(col) + 0.5 - half) * pitch_m, (double(row) - half) * pitch_m, true});
        for (std::size_t row = 0; row + 1 < side; ++row)
            for (std::size_t col = 0; col < side; ++col)
                layout.sites.push_back({(double(col) - half) * pitch_m, (double(row) + 0.5 - half) * pitch_m, false});
        layout.sites.resize(q + 1);
        return layout;
    }

    Surrogate synth_pixel_surrogate(const PixelLayout &layout, std::uint64_t seed, const SurrogateParams &params,
                                    const FrequencyGrid &freqs, const numerics::QuadratureGrid &grid)
    {
        const std::size_t ports = layout.sites.size();
        if (ports < 2)
            throw InvalidArgument("synth_pixel_surrogate: layout has no internal ports");
        if (!(params.center_frequency_hz > 0.0) || !(params.decay_length_m > 0.0))
            throw InvalidArgument("synth_pixel_surrogate: centre frequency and decay length must be positive");

        Rng rng(seed);
        Eigen::MatrixXd resistance = Eigen::MatrixXd::Zero(Eigen::Index(ports), Eigen::Index(ports));
        Eigen::MatrixXd reactance = Eigen::MatrixXd::Zero(Eigen::Index(ports), Eigen::Index(ports));

        resistance(0, 0) = params.feed_impedance_ohm.real();
        reactance(0, 0) = params.feed_impedance_ohm.imag();
        for (std::size_t p = 1; p < ports; ++p)
        {
            resistance(Eigen::Index(p), Eigen::Index(p)) = params.self_resistance_ohm;
            reactance(Eigen::Index(p), Eigen::Index(p)) =
                params.self_reactance_ohm + params.reactance_jitter_ohm * uniform(rng, -1.0, 1.0);
        }
        for (std::size_t p = 0; p < ports; ++p)
            for (std::size_t q = p + 1; q < ports; ++q)
            {
                const double dist = std::hypot(layout.sites[p].x_m - layout.sites[q].x_m,
                                               layout.sites[p].y_m - layout.sites[q].y_m);
                const double envelope = std::exp(-dist / params.decay_length_m);
                const double a = uniform(rng, -1.0, 1.0);
                const double b = uniform(rng, -1.0, 1.0);
                const double jitter = params.reactance_jitter_ohm * uniform(rng, -1.0, 1.0);
                double r, x;
                if (p == 0)
                {
                    r = params.feed_coupling_ohm * envelope * a;
                    x = params.feed_coupling_ohm * envelope * b + jitter * envelope;
                }
                else
                {
                    r = params.coupling_resistance_ohm * envelope * a;
                    x = params.coupling_reactance_ohm * envelope * b + jitter * envelope;
                }
                resistance(Eigen::Index(p), Eigen::Index(q)) = resistance(Eigen::Index(q), Eigen::Index(p)) = r;
                reactance(Eigen::Index(p), Eigen::Index(q)) = reactance(Eigen::Index(q), Eigen::Index(p)) = x;
            }

        // Passivity: clip the negative part of the spectrum of Re(Z).
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(resistance);
        const Eigen::VectorXd clipped = es.eigenvalues().cwiseMax(0.0);
        resistance = es.eigenvectors() * clipped.asDiagonal() * es.eigenvectors().transpose();
        resistance = 0.5 * (resistance + resistance.transpose()).eval();

        std::vector<double> f = freqs.samples();
        std::vector<ComplexMatrix> z;
        z.reserve(f.size());
        for (double ft : f)
        {
            const double scale = ft / params.center_frequency_hz;
            ComplexMatrix m(ports, ports);
            for (std::size_t r = 0; r < ports; ++r)
                for (std::size_t c = 0; c < ports; ++c)
                    m(r, c) = complex(resistance(Eigen::Index(r), Eigen::Index(c)),
                                      reactance(Eigen::Index(r), Eigen::Index(c)) * scale);
            z.push_back(std::move(m));
        }

        Surrogate out;
        out.layout = layout;
        out.network = MultiportNetwork(f, std::move(z));
        out.patterns = PatternGrid(grid, f, ports);
        for (std::size_t t = 0; t < f.size(); ++t)
        {
            const double k = 2.0 * std::numbers::pi * f[t] / speed_of_light;
            for (std::size_t p = 0; p < ports; ++p)
            {
                const auto &site = layout.sites[p];
                auto field = out.patterns.port(t, p);
                for (std::size_t n = 0; n < grid.size(); ++n)
                {
                    const auto &d = grid.nodes[n];
                    const double st = std::sin(d.theta);
                    const complex phase =
                        std::polar(1.0, k * (site.x_m * st * std::cos(d.phi) + site.y_m * st * std::sin(d.phi)));
                    const auto e = elementary_dipole(site.horizontal, d);
                    field[n] = {e.theta * phase, e.phi * phase};
                }
            }
        }
        return out;
    }
}
