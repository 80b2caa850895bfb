#pragma once

#include <boost/container_hash/hash.hpp>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace symsperner::detail {

struct IdVectorHash {
    std::size_t operator()(const std::vector<std::uint32_t>& ids) const noexcept {
        return boost::hash_range(ids.begin(), ids.end());
    }
};

/// Runs body(i) for i in [0, count) on up to `jobs` threads, in contiguous
/// blocks. The first exception (lowest block) is rethrown after joining.
template <typename Body>
void parallel_for(std::size_t count, unsigned jobs, Body&& body) {
    const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(jobs, count));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::vector<std::exception_ptr> errors(workers);
    {
        std::vector<std::jthread> threads;
        threads.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            threads.emplace_back([&, w] {
                const std::size_t begin = count * w / workers;
                const std::size_t end = count * (w + 1) / workers;
                try {
                    for (std::size_t i = begin; i < end; ++i) body(i);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
    }
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

}  // namespace symsperner::detail
