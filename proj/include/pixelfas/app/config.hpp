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
#ifndef PIXELFAS_APP_CONFIG_HPP
#define PIXELFAS_APP_CONFIG_HPP

#include "pixelfas/em/surrogate.hpp"
#include "pixelfas/error.hpp"
#include "pixelfas/impm/switch_model.hpp"
#include "pixelfas/numerics/quadrature.hpp"
#include "pixelfas/search/ordering.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace pixelfas::app
{
    // Invalid or inconsistent run configuration.
    class ConfigError : public Error
    {
    public:
        using Error::Error;
    };

    enum class InputMode
    {
        surrogate, // synthetic pixel network and patterns
        files,     // network file plus pattern bundle
        dipole     // translated dipole patterns injected as states, no circuit model
    };

    struct RunConfig
    {
        InputMode mode = InputMode::surrogate;
        std::filesystem::path network_path;
        std::filesystem::path pattern_dir;

        // surrogate
        std::size_t internal_ports = 60;
        double pixel_pitch_m = 0.04;
        std::optional<std::uint64_t> surrogate_seed; // defaults to the master seed
        em::SurrogateParams surrogate;

        std::size_t fas_ports = 12;          // N
        double aperture_wavelengths = 0.5;   // W
        std::size_t switches = 6;            // P
        double z0_ohm = 50.0;
        double f_lower_hz = 0.0;
        double f_upper_hz = 0.0;
        std::size_t frequency_samples = 1;   // T
        numerics::PasSupport pas_support = numerics::PasSupport::upper_hemisphere;
        numerics::QuadratureResolution resolution;

        std::optional<impm::SwitchModel> switch_model;

        search::GAParams ga;
        std::uint64_t seed = 1;
        std::size_t threads = 1;
        std::uint64_t budget = 100000;
        std::size_t target_matched_sets = 100;
        std::size_t baseline_samples = 100;

        // fixed design for eval / order
        std::optional<std::vector<std::size_t>> switch_positions;
        std::optional<std::vector<std::uint8_t>> hardwire_bits;

        std::uint64_t content_hash = 0; // of the normalized key/value content
        std::filesystem::path source;   // file the config came from, if any

        std::uint64_t surrogate_seed_or_master() const { return surrogate_seed.value_or(seed); }

        // Cross-field checks (files exist, N <= 2^P, Z0 > 0, switch model present where needed).
        void validate() const;
    };

    // Text format: one `key = value` per line, `#` starts a comment, units in key names.
    // Relative paths resolve against `base_dir`. Throws ConfigError naming the line.
    RunConfig parse_config(std::istream &in, const std::string &source, const std::filesystem::path &base_dir);
    RunConfig load_config(const std::filesystem::path &path);

    std::string to_string(InputMode mode);
}

#endif
