#pragma once

#include <exception>
#include <thread>
#include <vector>

namespace simplet::detail {

// Runs work(worker) for worker in [0, workers) and rethrows the first
// exception raised by any worker.
template <typename Work>
void run_workers(unsigned workers, Work&& work)
{
    if (workers <= 1) {
        work(0u);
        return;
    }
    std::vector<std::exception_ptr> errors(workers);
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                try {
                    work(w);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
    }
    for (auto& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
}

}  // namespace simplet::detail
