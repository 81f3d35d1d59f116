// SPDX-License-Identifier: Apache-2.0
//
// bsplit: beam-split aware IRS/OFDMA downlink simulator
// Copyright (C) 2026 The bsplit authors
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

#ifndef BSPLIT_PARALLEL_HPP
#define BSPLIT_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <type_traits>
#include <vector>

namespace bsplit
{
    // 0 means "use hardware concurrency".
    inline unsigned resolve_workers(unsigned workers)
    {
        if (workers != 0)
            return workers;
        const unsigned hw = std::thread::hardware_concurrency();
        return hw == 0 ? 1u : hw;
    }

    // Evaluates fn(i) for i in [0, count) on up to `workers` threads and returns the results in
    // index order. The output never depends on the worker count as long as fn(i) depends only on i.
    template <class Fn>
    auto parallel_map(std::size_t count, unsigned workers, Fn &&fn) -> std::vector<std::invoke_result_t<Fn &, std::size_t>>
    {
        using Result = std::invoke_result_t<Fn &, std::size_t>;
        std::vector<Result> out(count);
        const unsigned n_threads = static_cast<unsigned>(std::min<std::size_t>(resolve_workers(workers), count));
        if (n_threads <= 1)
        {
            for (std::size_t i = 0; i < count; ++i)
                out[i] = fn(i);
            return out;
        }

        std::atomic<std::size_t> next{0};
        std::exception_ptr error;
        std::mutex error_mutex;
        auto body = [&]()
        {
            for (;;)
            {
                const std::size_t i = next.fetch_add(1);
                if (i >= count)
                    return;
                try
                {
                    out[i] = fn(i);
                }
                catch (...)
                {
                    std::lock_guard lock(error_mutex);
                    if (!error)
                        error = std::current_exception();
                    next.store(count);
                    return;
                }
            }
        };
        {
            std::vector<std::jthread> pool;
            pool.reserve(n_threads);
            for (unsigned w = 0; w < n_threads; ++w)
                pool.emplace_back(body);
        }
        if (error)
            std::rethrow_exception(error);
        return out;
    }
}

#endif
