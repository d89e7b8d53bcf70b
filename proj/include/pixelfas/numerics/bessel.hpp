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
#ifndef PIXELFAS_NUMERICS_BESSEL_HPP
#define PIXELFAS_NUMERICS_BESSEL_HPP

namespace pixelfas::numerics
{
    // Bessel function of the first kind, order zero.
    //
    // Ascending power series for |x| <= 8, Miller's backward recurrence normalized by
    // J0 + 2*sum(J2k) = 1 for 8 < |x| <= 40, Hankel asymptotic expansion beyond.
    // Absolute error stays below 1e-12 on |x| <= 50. Even by construction: J0(-x) == J0(x).
    // Throws InvalidArgument for non-finite x.
    double bessel_j0(double x);
}

#endif
