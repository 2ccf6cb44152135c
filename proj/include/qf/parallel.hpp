#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace qf {

// Process-wide worker count. Block partitions never depend on it, so
// results are bit-identical for any thread count.
class ExecutionContext {
public:
    static void set_threads(unsigned n) { threads_ref() = std::max(1u, n); }
    static unsigned threads() { return threads_ref(); }

private:
    static unsigned& threads_ref() {
        static unsigned t = 1;
        return t;
    }
};

// Splits [0, n) into fixed blocks of size `block`, evaluates fn(begin, end)
// for every block on the worker pool and returns the partials in block order.
template <class T, class Fn>
std::vector<T> map_blocks(std::size_t n, std::size_t block, Fn fn) {
    if (block == 0) block = 1;
    std::size_t nb = (n + block - 1) / block;
    std::vector<T> out(nb);
    unsigned workers = std::min<std::size_t>(ExecutionContext::threads(), nb);
    auto run = [&](std::size_t b) {
        std::size_t lo = b * block, hi = std::min(n, lo + block);
        out[b] = fn(lo, hi);
    };
    if (workers <= 1) {
        for (std::size_t b = 0; b < nb; ++b) run(b);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr err;
    std::mutex err_mu;
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                std::size_t b = next.fetch_add(1);
                if (b >= nb) return;
                try {
                    run(b);
                } catch (...) {
                    std::lock_guard<std::mutex> lk(err_mu);
                    if (!err) err = std::current_exception();
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (err) std::rethrow_exception(err);
    return out;
}

}  // namespace qf
