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
#ifndef PIXELFAS_HASH_HPP
#define PIXELFAS_HASH_HPP

#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <span>
#include <string>
#include <string_view>
#include <type_traits>

namespace pixelfas
{
    // FNV-1a, 64 bit. Not cryptographic; used for cache keys and file digests.
    class Fnv1a
    {
    public:
        void update(const void *data, std::size_t size)
        {
            const auto *p = static_cast<const unsigned char *>(data);
            for (std::size_t i = 0; i < size; ++i)
            {
                state_ ^= p[i];
                state_ *= 0x100000001b3ULL;
            }
        }

        void update(std::string_view s) { update(s.data(), s.size()); }

        template <typename T>
            requires std::is_trivially_copyable_v<T>
        void update_value(const T &v) { update(&v, sizeof v); }

        template <typename T>
            requires std::is_trivially_copyable_v<T>
        void update_span(std::span<const T> v) { update(v.data(), v.size_bytes()); }

        std::uint64_t digest() const { return state_; }

    private:
        std::uint64_t state_ = 0xcbf29ce484222325ULL;
    };

    inline std::string hex64(std::uint64_t v)
    {
        char buf[17];
        std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
        return buf;
    }
}

#endif
