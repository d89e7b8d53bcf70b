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
#include "pixelfas/numerics/bessel.hpp"

#include "pixelfas/error.hpp"

#include <cmath>
#include <numbers>

namespace pixelfas::numerics
{
    namespace
    {
        double j0_series(double x)
        {
            // sum_k (-1)^k (x^2/4)^k / (k!)^2
            const double q = 0.25 * x * x;
            double term = 1.0;
            double sum = 1.0;
            for (int k = 1; k < 200; ++k)
            {
                term *= -q / (double(k) * double(k));
                sum += term;
                if (std::abs(term) < 1e-18 * std::abs(sum) && std::abs(term) < 1e-18)
                    break;
            }
            return sum;
        }

        double j0_miller(double x)
        {
            // Start well above x where J_m(x) is negligible; m even.
            int m = 2 * ((int(x) + 40) / 2 + 1);
            double j_next = 0.0; // J_{k+1}
            double j_curr = 1e-300; // J_k, arbitrary scale
            double norm = 0.0;      // accumulates 2 * sum of even orders >= 2
            for (int k = m; k > 0; --k)
            {
                const double j_prev = 2.0 * double(k) / x * j_curr - j_next;
                j_next = j_curr;
                j_curr = j_prev;
                // j_curr now holds J_{k-1}
                if ((k - 1) % 2 == 0 && k - 1 > 0)
                    norm += 2.0 * j_curr;
                if (std::abs(j_curr) > 1e250)
                {
                    j_curr *= 1e-250;
                    j_next *= 1e-250;
                    norm *= 1e-250;
                }
            }
            return j_curr / (norm + j_curr);
        }

        double j0_asymptotic(double x)
        {
            const double z8 = 8.0 * x;
            double p = 1.0;
            double q = 0.0;
            double term = 1.0;
            double last = 1.0;
            for (int k = 1; k < 60; ++k)
            {
                const double odd = double(2 * k - 1);
                term *= -(odd * odd) / (double(k) * z8);
                if (std::abs(term) > last)
                    break;
                last = std::abs(term);
                // k odd -> Q with sign (-1)^((k-1)/2); k even -> P with sign (-1)^(k/2)
                if (k % 2 == 1)
                    q += ((k - 1) / 2 % 2 == 0 ? 1.0 : -1.0) * term;
                else
                    p += ((k / 2) % 2 == 0 ? 1.0 : -1.0) * term;
                if (last < 1e-17)
                    break;
            }
            const double chi = x - 0.25 * std::numbers::pi;
            return std::sqrt(2.0 / (std::numbers::pi * x)) * (p * std::cos(chi) - q * std::sin(chi));
        }
    }

    double bessel_j0(double x)
    {
        if (!std::isfinite(x))
            throw InvalidArgument("bessel_j0: non-finite argument");
        const double ax = std::abs(x);
        if (ax <= 8.0)
            return j0_series(ax);
        if (ax <= 40.0)
            return j0_miller(ax);
        return j0_asymptotic(ax);
    }
}
