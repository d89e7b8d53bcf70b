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
#ifndef PIXELFAS_APP_REPORTS_HPP
#define PIXELFAS_APP_REPORTS_HPP

#include "pixelfas/numerics/matrix.hpp"
#include "pixelfas/pcdm/covariance.hpp"

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace pixelfas::app
{
    // `row,col,value` with 1-based indices, 17 significant digits.
    void write_matrix_csv(const std::filesystem::path &path, const numerics::RealMatrix &m);
    numerics::RealMatrix read_matrix_csv(const std::filesystem::path &path);

    pcdm::CovarianceMatrix read_covariance_csv(const std::filesystem::path &path);

    // One row per FAS port: `port,state_index,sw_<q>...` where q are the 1-based switch positions.
    struct StateTable
    {
        std::vector<std::size_t> switch_positions;
        std::vector<std::size_t> ports;                  // as listed, 1-based
        std::vector<std::uint64_t> state_indices;        // as listed (informational)
        std::vector<std::vector<std::uint8_t>> bits;     // per row, one per switch position
    };

    void write_state_table(const std::filesystem::path &path, const StateTable &table);
    StateTable read_state_table(const std::filesystem::path &path);

    // FNV-1a digest of a file's bytes, hex encoded.
    std::string file_digest(const std::filesystem::path &path);
}

#endif
