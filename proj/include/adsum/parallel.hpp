#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>

namespace adsum {

// Threads used by module-internal loops. 0 means hardware concurrency.
void set_thread_count(unsigned n);
unsigned thread_count();

// Runs body(chunk) for chunk in [0, n_chunks). Chunk boundaries are chosen by the
// caller, never by the pool, so per-chunk results do not depend on the thread count.
void for_each_chunk(std::size_t n_chunks, const std::function<void(std::size_t)>& body);

struct ChunkRange {
    std::uint64_t lo, hi;  // half open
};

// Fixed-size split of [lo, hi) into chunks of `size` elements.
std::size_t chunk_count(std::uint64_t lo, std::uint64_t hi, std::uint64_t size);
ChunkRange chunk_at(std::uint64_t lo, std::uint64_t hi, std::uint64_t size, std::size_t i);

}  // namespace adsum
