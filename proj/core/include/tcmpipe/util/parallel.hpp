#pragma once

#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace tcmpipe::util {

// Worker count resolution: explicit flag > PIPELINE_WORKERS > hardware.
inline std::size_t resolve_workers(std::size_t requested)
{
    if (requested > 0)
    {
        return requested;
    }
    if (const char* env = std::getenv("PIPELINE_WORKERS"))
    {
        char* end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (end != env && v > 0)
        {
            return static_cast<std::size_t>(v);
        }
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

// Applies fn to every index of `items` across `workers` threads and returns
// results in input order, so output is identical regardless of worker count.
template <typename In, typename Out>
std::vector<Out> ordered_parallel_map(const std::vector<In>& items, std::size_t workers,
                                      const std::function<Out(const In&)>& fn)
{
    std::vector<Out> results(items.size());
    workers = resolve_workers(workers);
    if (workers <= 1 || items.size() <= 1)
    {
        for (std::size_t i = 0; i < items.size(); ++i)
        {
            results[i] = fn(items[i]);
        }
        return results;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mu;
    auto work = [&]() {
        for (;;)
        {
            std::size_t i = next.fetch_add(1);
            if (i >= items.size())
            {
                return;
            }
            try
            {
                results[i] = fn(items[i]);
            }
            catch (...)
            {
                std::lock_guard<std::mutex> lock(error_mu);
                if (!first_error)
                {
                    first_error = std::current_exception();
                }
                next.store(items.size());
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t t = 0; t < workers; ++t)
    {
        pool.emplace_back(work);
    }
    for (auto& t : pool)
    {
        t.join();
    }
    if (first_error)
    {
        std::rethrow_exception(first_error);
    }
    return results;
}

} // namespace tcmpipe::util
