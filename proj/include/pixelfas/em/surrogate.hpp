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
#ifndef PIXELFAS_EM_SURROGATE_HPP
#define PIXELFAS_EM_SURROGATE_HPP

#include "pixelfas/em/frequency_grid.hpp"
#include "pixelfas/em/network.hpp"
#include "pixelfas/em/pattern.hpp"

#include <cstdint>
#include <vector>

namespace pixelfas::em
{
    // N copies of a vertical element pattern, copy n displaced along the aperture so that it carries
    // the phase exp(j 2 pi (n-1) W/(N-1) cos(phi)) relative to copy 1. e_phi is zero.
    // The copies are stored as N ports of a single-frequency PatternGrid.
    PatternGrid synth_dipole_translations(std::size_t n, double aperture_wavelengths,
                                          const numerics::QuadratureGrid &grid, double frequency_hz = 2.5e9);

    // A connection point of the pixel patch. Horizontal sites bridge left/right neighbours and
    // radiate as x-directed elementary dipoles, vertical sites as y-directed ones.
    struct PortSite
    {
        double x_m = 0.0;
        double y_m = 0.0;
        bool horizontal = true;
    };

    // Square patch of side x side pixels centred on the origin. Site 0 is the feed at the centre,
    // sites 1..Q are the first Q inter-pixel edges (all horizontal edges row by row, then the vertical ones).
    struct PixelLayout
    {
        std::size_t side = 0;
        double pitch_m = 0.0;
        std::vector<PortSite> sites;

        std::size_t internal_ports() const { return sites.empty() ? 0 : sites.size() - 1; }
    };

    // Smallest square patch with at least q edges.
    PixelLayout make_pixel_layout(std::size_t q, double pitch_m);

    struct SurrogateParams
    {
        double center_frequency_hz = 2.5e9;
        complex feed_impedance_ohm{50.0, 15.0};   // Z_E at the centre frequency
        double self_resistance_ohm = 0.5;         // diagonal of Z_I
        double self_reactance_ohm = 0.0;          // diagonal of Z_I, scaled with f / f_center
        double coupling_resistance_ohm = 5.0;     // peak internal-internal coupling, real part
        double coupling_reactance_ohm = 40.0;     // peak internal-internal coupling, imaginary part
        double feed_coupling_ohm = 25.0;          // peak feed-internal coupling magnitude
        double decay_length_m = 0.2;              // exp(-distance / decay_length) envelope
        double reactance_jitter_ohm = 5.0;        // random symmetric reactance added everywhere
    };

    struct Surrogate
    {
        PixelLayout layout;
        MultiportNetwork network;
        PatternGrid patterns;
    };

    // Z = D + K + jX with D the configured self impedances, K a distance-decayed random symmetric
    // coupling and X a random symmetric reactance. Re(Z) is made positive semidefinite by clipping
    // negative eigenvalues. Reactances scale linearly with frequency. Deterministic in seed.
    Surrogate synth_pixel_surrogate(const PixelLayout &layout, std::uint64_t seed, const SurrogateParams &params,
                                    const FrequencyGrid &freqs, const numerics::QuadratureGrid &grid);
}

#endif
