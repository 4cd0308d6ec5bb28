#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <type_traits>
#include <vector>

namespace hgl {

/// Evaluates f(0), ..., f(count - 1) on up to `jobs` threads. Results are stored
/// by index, so the output never depends on scheduling. If calls throw, the
/// exception from the lowest index seen is rethrown after all workers stop.
template <class F>
auto parallel_map(std::size_t count, unsigned jobs, F&& f) -> std::vector<std::invoke_result_t<F&, std::size_t>>
{
    using R = std::invoke_result_t<F&, std::size_t>;
    std::vector<std::optional<R>> slots(count);
    const std::size_t workers = std::min<std::size_t>(std::max(1u, jobs), count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) slots[i].emplace(f(i));
    } else {
        std::atomic<std::size_t> next{0};
        std::atomic<bool> failed{false};
        std::exception_ptr error;
        std::size_t error_index = count;
        std::mutex error_mutex;
        auto work = [&] {
            for (std::size_t i = next++; i < count && !failed; i = next++) {
                try {
                    slots[i].emplace(f(i));
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (i < error_index) {
                        error = std::current_exception();
                        error_index = i;
                    }
                    failed = true;
                }
            }
        };
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(work);
        for (auto& t : pool) t.join();
        if (error) std::rethrow_exception(error);
    }
    std::vector<R> out;
    out.reserve(count);
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

/// Indices i < count with pred(i), in increasing order.
template <class P>
std::vector<std::size_t> parallel_filter(std::size_t count, unsigned jobs, P&& pred)
{
    const auto keep = parallel_map(count, jobs, [&](std::size_t i) { return static_cast<char>(pred(i) ? 1 : 0); });
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < count; ++i)
        if (keep[i]) out.push_back(i);
    return out;
}

}  // namespace hgl
