#ifndef GRAPHFDR_PARALLEL_HPP
#define GRAPHFDR_PARALLEL_HPP

#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace graphfdr {

// Runs fn(i) for i in [0, count) on up to hardware_concurrency threads.
// Work items must be independent; callers key results by index so the
// outcome does not depend on scheduling. The lowest-index exception, if
// any, is rethrown after all threads join.
inline void parallel_for_index(int count, const std::function<void(int)>& fn) {
    if (count <= 0) return;
    unsigned hw = std::thread::hardware_concurrency();
    int n_threads = static_cast<int>(hw == 0 ? 1 : hw);
    if (n_threads > count) n_threads = count;

    if (n_threads <= 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }

    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(count));
    std::vector<std::thread> workers;
    workers.reserve(static_cast<std::size_t>(n_threads));
    for (int t = 0; t < n_threads; ++t) {
        workers.emplace_back([&, t]() {
            for (int i = t; i < count; i += n_threads) {
                try {
                    fn(i);
                } catch (...) {
                    errors[static_cast<std::size_t>(i)] = std::current_exception();
                }
            }
        });
    }
    for (auto& w : workers) w.join();
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

} // namespace graphfdr

#endif // GRAPHFDR_PARALLEL_HPP
