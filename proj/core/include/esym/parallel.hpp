#pragma once

#include <cstddef>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace esym {

/// Runs fn(i) for i in [0, count) across at most `jobs` threads (0 = hardware
/// concurrency). Work items must be independent; callers get determinism by
/// writing into index-addressed slots, so results do not depend on the worker
/// count or scheduling.
inline void parallel_for(std::size_t count, unsigned jobs,
                         const std::function<void(std::size_t)>& fn) {
    if (count == 0) return;
    unsigned hw = std::thread::hardware_concurrency();
    if (jobs == 0) jobs = hw ? hw : 1;
    if (jobs > count) jobs = static_cast<unsigned>(count);
    if (jobs <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }

    std::vector<std::thread> workers;
    std::vector<std::exception_ptr> errors(jobs);
    std::size_t chunk = (count + jobs - 1) / jobs;
    for (unsigned w = 0; w < jobs; ++w) {
        std::size_t begin = static_cast<std::size_t>(w) * chunk;
        std::size_t end = std::min(count, begin + chunk);
        if (begin >= end) break;
        workers.emplace_back([&, w, begin, end] {
            try {
                for (std::size_t i = begin; i < end; ++i) fn(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : workers) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

}  // namespace esym
