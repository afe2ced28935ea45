#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace gsb {

// Runs body(j) for j in [0, n). make_body(worker) is called once per worker
// thread and returns that worker's body; items are handed out dynamically.
// The first exception thrown by any worker is rethrown.
template <class MakeBody>
void parallel_for(std::size_t n, unsigned threads, MakeBody make_body)
{
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
    if (threads == 1) {
        auto body = make_body(0u);
        for (std::size_t j = 0; j < n; ++j) body(j);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) {
        pool.emplace_back([&, w] {
            try {
                auto body = make_body(w);
                for (std::size_t j; (j = next.fetch_add(1)) < n;) body(j);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
                next = n;
            }
        });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace gsb
