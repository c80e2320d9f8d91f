#ifndef SVO_PARALLEL_HPP
#define SVO_PARALLEL_HPP

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace svo {

struct engine_options {
    // 0 means std::thread::hardware_concurrency().
    unsigned threads = 1;
};

unsigned resolve_threads(unsigned requested);

/// Splits [0, count) into at most `threads` contiguous chunks and runs
/// `body(chunk_index, begin, end)` on each, chunk 0 on the calling thread.
/// Chunks hold at least `min_chunk` items. Returns the number of chunks
/// used. Rethrows the first worker exception.
template <class Body>
std::size_t parallel_chunks(std::size_t count, unsigned threads, Body&& body, std::size_t min_chunk = 512) {
    std::size_t chunks = std::max<std::size_t>(1, std::min<std::size_t>(threads, count / min_chunk));
    if (chunks <= 1) {
        body(std::size_t{0}, std::size_t{0}, count);
        return 1;
    }
    const std::size_t step = (count + chunks - 1) / chunks;
    std::vector<std::exception_ptr> errors(chunks);
    std::vector<std::thread> workers;
    workers.reserve(chunks - 1);
    auto run = [&](std::size_t c) {
        try {
            body(c, c * step, std::min(count, (c + 1) * step));
        } catch (...) {
            errors[c] = std::current_exception();
        }
    };
    for (std::size_t c = 1; c < chunks; ++c) workers.emplace_back(run, c);
    run(0);
    for (auto& w : workers) w.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return chunks;
}

}  // namespace svo

#endif  // SVO_PARALLEL_HPP
