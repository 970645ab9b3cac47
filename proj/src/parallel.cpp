#include "betheotto/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace betheotto {

namespace {
thread_local bool inside_parallel_region = false;
}

int resolve_thread_count(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("BETHEOTTO_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& f, int threads) {
    if (n == 0) return;
    const int workers = inside_parallel_region
                            ? 1
                            : std::min<int>(resolve_thread_count(threads), static_cast<int>(n));
    if (workers <= 1) {
        const bool was_inside = inside_parallel_region;
        inside_parallel_region = true;
        try {
            for (std::size_t i = 0; i < n; ++i) f(i);
        } catch (...) {
            inside_parallel_region = was_inside;
            throw;
        }
        inside_parallel_region = was_inside;
        return;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto worker = [&] {
        inside_parallel_region = true;
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= n) break;
            try {
                f(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers) - 1);
    for (int t = 1; t < workers; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

} // namespace betheotto
