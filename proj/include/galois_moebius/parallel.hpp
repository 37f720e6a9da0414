#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace gm {

/// GALOIS_MOEBIUS_THREADS if set and positive, else the hardware concurrency.
inline unsigned worker_count() {
    if (const char* env = std::getenv("GALOIS_MOEBIUS_THREADS")) {
        try {
            const long v = std::stol(env);
            if (v > 0) return static_cast<unsigned>(v);
        } catch (const std::exception&) {
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

/// Runs body(begin, end) over contiguous chunks of [0, count) and returns the
/// per-chunk results in chunk order, so the merged output does not depend on
/// scheduling.
template <class Result, class Body>
std::vector<Result> parallel_chunks(std::size_t count, Body&& body) {
    const std::size_t workers = std::min<std::size_t>(worker_count(), std::max<std::size_t>(count, 1));
    std::vector<Result> results(workers);
    if (workers <= 1) {
        results[0] = body(std::size_t{0}, count);
        return results;
    }
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> threads;
    const std::size_t chunk = (count + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t begin = std::min(count, w * chunk);
        const std::size_t end = std::min(count, begin + chunk);
        threads.emplace_back([&, w, begin, end] {
            try {
                results[w] = body(begin, end);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : threads) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return results;
}

}  // namespace gm
