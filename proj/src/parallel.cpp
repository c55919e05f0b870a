#include "gsym/parallel.hpp"

#include <atomic>
#include <thread>
#include <vector>

namespace gsym {

namespace {
std::atomic<int> g_workers{1};
}

int worker_count() { return g_workers.load(); }

void set_worker_count(int workers) { g_workers.store(workers < 1 ? 1 : workers); }

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& f) {
    const int workers = worker_count();
    if (workers <= 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) f(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    const int spawn = static_cast<int>(std::min<std::size_t>(workers, count));
    pool.reserve(spawn);
    for (int t = 0; t < spawn; ++t) {
        pool.emplace_back([&] {
            while (true) {
                const std::size_t i = next.fetch_add(1);
                if (i >= count) return;
                f(i);
            }
        });
    }
    for (auto& thread : pool) thread.join();
}

} // namespace gsym
