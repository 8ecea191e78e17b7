#ifndef CONTRACTAD_PARALLEL_HPP
#define CONTRACTAD_PARALLEL_HPP

#include <atomic>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace contractad {

/// Worker count: explicit argument, else CONTRACTAD_LAB_JOBS, else 1.
inline int resolve_jobs(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("CONTRACTAD_LAB_JOBS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 1;
}

/// Applies fn to every index in [0, count); results land in index order,
/// so aggregation does not depend on worker scheduling.
template <typename T>
std::vector<T> parallel_collect(int jobs, std::size_t count, const std::function<T(std::size_t)>& fn) {
    std::vector<T> results(count);
    jobs = resolve_jobs(jobs);
    if (jobs <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) results[i] = fn(i);
        return results;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    workers.reserve(jobs);
    for (int w = 0; w < jobs; ++w) {
        workers.emplace_back([&]() {
            while (true) {
                std::size_t i = next.fetch_add(1);
                if (i >= count) break;
                results[i] = fn(i);
            }
        });
    }
    for (auto& t : workers) t.join();
    return results;
}

} // namespace contractad

#endif
