#include "adsum/parallel.hpp"

#include "adsum/errors.hpp"
#include "adsum/real.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>
#include <vector>

namespace adsum {

namespace {
std::atomic<unsigned> g_threads{1};
}

void set_thread_count(unsigned n) {
    if (n == 0) n = std::max(1u, std::thread::hardware_concurrency());
    g_threads = n;
}

unsigned thread_count() { return g_threads; }

void for_each_chunk(std::size_t n_chunks, const std::function<void(std::size_t)>& body) {
    unsigned t = std::min<std::size_t>(thread_count(), n_chunks);
    if (t <= 1) {
        for (std::size_t i = 0; i < n_chunks; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr err;
    std::mutex err_mu;
    auto work = [&] {
        for (;;) {
            std::size_t i = next++;
            if (i >= n_chunks) return;
            try {
                body(i);
            } catch (...) {
                std::lock_guard lk(err_mu);
                if (!err) err = std::current_exception();
                next = n_chunks;
                return;
            }
        }
    };
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < t; ++i) pool.emplace_back(work);
    pool.clear();
    if (err) std::rethrow_exception(err);
}

std::size_t chunk_count(std::uint64_t lo, std::uint64_t hi, std::uint64_t size) {
    if (hi <= lo) return 0;
    return static_cast<std::size_t>((hi - lo + size - 1) / size);
}

ChunkRange chunk_at(std::uint64_t lo, std::uint64_t hi, std::uint64_t size, std::size_t i) {
    std::uint64_t a = lo + i * size;
    return {a, std::min(hi, a + size)};
}

std::string to_string(const Real& x, int digits) {
    std::ostringstream os;
    os.precision(digits);
    os << std::scientific << x;
    return os.str();
}

std::string to_string(u128 x) {
    if (x == 0) return "0";
    std::string s;
    while (x) {
        s.push_back(char('0' + int(x % 10)));
        x /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

std::string to_string(i128 x) {
    if (x < 0) return "-" + to_string(u128(-x));
    return to_string(u128(x));
}

}  // namespace adsum
