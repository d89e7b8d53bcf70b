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
#ifndef PIXELFAS_APP_ORACLE_HPP
#define PIXELFAS_APP_ORACLE_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace pixelfas::app
{
    struct SuiteReport
    {
        std::string name;
        bool passed = false;
        double measured = 0.0;  // worst deviation, or failure count for counting suites
        double tolerance = 0.0;
        double seconds = 0.0;
        std::string detail;
    };

    struct OracleOptions
    {
        bool full = false;           // fast: dipole and decode only
        bool perturb_kernel = false; // fault injection for the pcdm suite
    };

    std::vector<SuiteReport> run_oracles(const OracleOptions &options);

    // Prints a JSON report; returns exit_code::ok or exit_code::oracle.
    int cmd_oracle(const OracleOptions &options, std::ostream &out);
}

#endif
