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
#ifndef PIXELFAS_RANDOM_HPP
#define PIXELFAS_RANDOM_HPP

#include <cstdint>
#include <random>

namespace pixelfas
{
    // std::mt19937_64 is fully specified by the standard; the distributions below are written out
    // so that results do not depend on the standard library implementation.
    using Rng = std::mt19937_64;

    inline std::uint64_t splitmix64(std::uint64_t x)
    {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    // Seed of task `index` in stream `stream` derived from a master seed.
    inline std::uint64_t sub_seed(std::uint64_t master, std::uint64_t stream, std::uint64_t index)
    {
        return splitmix64(splitmix64(master ^ splitmix64(stream)) + index);
    }

    // Uniform in [0, 1)
    inline double uniform01(Rng &rng) { return double(rng() >> 11) * 0x1.0p-53; }

    inline double uniform(Rng &rng, double lo, double hi) { return lo + (hi - lo) * uniform01(rng); }

    // Uniform in [0, n), n > 0, by rejection
    inline std::uint64_t uniform_index(Rng &rng, std::uint64_t n)
    {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v;
        do
            v = rng();
        while (v >= limit);
        return v % n;
    }

    inline bool bernoulli(Rng &rng, double p) { return uniform01(rng) < p; }
}

#endif
