#include "scramble/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "scramble/errors.hpp"

namespace scramble {

int default_worker_count() {
    const char* env = std::getenv("SCRAMBLE_WORKERS");
    if (!env || !*env) return 1;
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1 || v > 1024)
        throw config_error("SCRAMBLE_WORKERS must be an integer in 1..1024");
    return static_cast<int>(v);
}

int resolve_worker_count(int configured) {
    if (configured < 0) throw config_error("worker count must be >= 0");
    return configured > 0 ? configured : default_worker_count();
}

void parallel_for(int workers, std::size_t count,
                  const std::function<void(std::size_t)>& fn) {
    if (count == 0) return;
    if (workers < 1) workers = 1;
    const std::size_t n_threads = std::min<std::size_t>(workers, count);
    if (n_threads == 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> threads;
    threads.reserve(n_threads);
    for (std::size_t k = 0; k < n_threads; ++k) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
    if (error) std::rethrow_exception(error);
}

} // namespace scramble
