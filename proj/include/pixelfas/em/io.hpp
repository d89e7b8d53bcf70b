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
#ifndef PIXELFAS_EM_IO_HPP
#define PIXELFAS_EM_IO_HPP

#include "pixelfas/em/frequency_grid.hpp"
#include "pixelfas/em/network.hpp"
#include "pixelfas/em/pattern.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>

namespace pixelfas::em
{
    struct LoadedNetwork
    {
        MultiportNetwork network;
        FrequencyGrid grid;               // first/last sample and count of the file
        double reciprocity_error = 0.0;   // |Z - Z^T|_inf / |Z|_inf
        bool reciprocity_warning = false; // error above 1e-9; measured data may be asymmetric
    };

    // Reads either the native Z-matrix text format or a Touchstone 2.0 Z-parameter file.
    // Throws ParseError (with line number) on malformed input.
    LoadedNetwork load_network(const std::filesystem::path &path);
    LoadedNetwork parse_network(std::istream &in, const std::string &source);

    // Native format:
    //   # Zmatrix ports=<Q+1> freqs=<T> unit=Hz
    //   freq <value>
    //   <Q+1 rows of comma separated re:im entries>
    //   ... repeated per frequency
    void write_network(const std::filesystem::path &path, const MultiportNetwork &network);
    void write_network(std::ostream &out, const MultiportNetwork &network);

    // Touchstone 2.0 with Z parameters only ([Version] 2.0, option line "# <unit> Z <RI|MA|DB> R <ref>").
    // Z data in version 2.0 files is taken as absolute ohms.
    LoadedNetwork parse_touchstone(std::istream &in, const std::string &source);

    // Pattern bundle: <dir>/manifest.json plus <dir>/pattern_f<t>.csv for t = 1..T with columns
    // port,theta_rad,phi_rad,re_etheta,im_etheta,re_ephi,im_ephi
    PatternGrid load_pattern_bundle(const std::filesystem::path &dir);
    void write_pattern_bundle(const std::filesystem::path &dir, const PatternGrid &patterns);

    // Port counts and frequency sets of a network and its pattern bundle must agree.
    void check_compatible(const MultiportNetwork &network, const PatternGrid &patterns);

    // 17 significant digits, reads back to the identical double.
    std::string format_double(double v);
}

#endif
