#ifndef WEDGE_PARALLEL_HPP
#define WEDGE_PARALLEL_HPP

#include <atomic>
#include <exception>
#include <thread>
#include <vector>

namespace wedge {

// Runs fn(i) for i in [0, count) on a bounded pool of workers pulling
// from a shared counter. Callers index results by i, so output order is
// independent of scheduling. threads == 0 picks the hardware count.
template <typename Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn) {
    if (threads == 0) threads = std::thread::hardware_concurrency();
    if (threads <= 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    if (threads > count) threads = static_cast<unsigned>(count);
    std::atomic<std::size_t> next{0};
    std::exception_ptr err;
    std::atomic<bool> failed{false};
    auto worker = [&] {
        while (!failed.load(std::memory_order_relaxed)) {
            std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                fn(i);
            } catch (...) {
                if (!failed.exchange(true)) err = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned k = 0; k < threads; ++k) pool.emplace_back(worker);
    for (std::thread& th : pool) th.join();
    if (err) std::rethrow_exception(err);
}

} // namespace wedge

#endif
