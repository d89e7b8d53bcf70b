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
#ifndef PIXELFAS_SEARCH_PARALLEL_HPP
#define PIXELFAS_SEARCH_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace pixelfas::search
{
    // Runs fn(i) for i in [0, count) on up to `threads` workers. Work is handed out by index;
    // results must be written to per-index slots by the caller. If any call throws, the exception
    // of the lowest failing index is rethrown after all workers finish.
    inline void parallel_for(std::size_t count, std::size_t threads, const std::function<void(std::size_t)> &fn)
    {
        threads = std::max<std::size_t>(1, std::min(threads, count));
        if (threads == 1)
        {
            for (std::size_t i = 0; i < count; ++i)
                fn(i);
            return;
        }
        std::atomic<std::size_t> next{0};
        std::mutex error_mutex;
        std::exception_ptr error;
        std::size_t error_index = count;
        auto worker = [&]
        {
            for (std::size_t i = next++; i < count; i = next++)
            {
                try
                {
                    fn(i);
                }
                catch (...)
                {
                    std::lock_guard lock(error_mutex);
                    if (i < error_index)
                    {
                        error_index = i;
                        error = std::current_exception();
                    }
                }
            }
        };
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w + 1 < threads; ++w)
            pool.emplace_back(worker);
        worker();
        for (auto &t : pool)
            t.join();
        if (error)
            std::rethrow_exception(error);
    }

    inline std::size_t default_thread_count()
    {
        return std::max(1u, std::thread::hardware_concurrency());
    }
}

#endif
