#include "adsum/arith/divisor_table.hpp"

#include "adsum/arith/factor.hpp"
#include "adsum/errors.hpp"
#include "adsum/parallel.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>

namespace adsum {

namespace {

constexpr char magic[8] = {'A', 'D', 'S', 'M', 'D', 'K', 'T', '1'};

std::uint64_t isqrt(std::uint64_t n) {
    auto r = (std::uint64_t)std::sqrt((long double)n);
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

template <class T>
void put_le(std::ofstream& out, T v) {
    unsigned char b[sizeof(T)];
    for (std::size_t i = 0; i < sizeof(T); ++i) b[i] = (unsigned char)(v >> (8 * i));
    out.write(reinterpret_cast<char*>(b), sizeof(T));
}

template <class T>
T get_le(std::ifstream& in) {
    unsigned char b[sizeof(T)];
    in.read(reinterpret_cast<char*>(b), sizeof(T));
    if (!in) fail(ErrorKind::resource, "divisor table file truncated");
    T v = 0;
    for (std::size_t i = 0; i < sizeof(T); ++i) v |= T(b[i]) << (8 * i);
    return v;
}

}  // namespace

std::uint32_t DivisorTable::max_value() const {
    return values.empty() ? 0 : *std::max_element(values.begin(), values.end());
}

std::vector<std::uint32_t> primes_up_to(std::uint32_t n) {
    std::vector<std::uint32_t> ps;
    if (n < 2) return ps;
    std::vector<bool> comp(n + 1, false);
    for (std::uint64_t i = 2; i <= n; ++i) {
        if (comp[i]) continue;
        ps.push_back(std::uint32_t(i));
        for (std::uint64_t j = i * i; j <= n; j += i) comp[j] = true;
    }
    return ps;
}

DivisorTable sieve_dk(unsigned k, std::uint64_t lo, std::uint64_t hi, const SieveOptions& opt) {
    if (k < 1) fail(ErrorKind::domain, "sieve_dk: k must be >= 1");
    if (lo < 1 || lo > hi) fail(ErrorKind::range, "sieve_dk: need 1 <= lo <= hi");
    std::uint64_t n = hi - lo + 1;
    std::uint64_t bytes = n * (opt.with_spf ? 8 : 4);
    if (bytes > opt.memory_budget) fail(ErrorKind::resource, "sieve_dk: memory budget exceeded");

    DivisorTable t;
    t.k = k;
    t.lo = lo;
    t.hi = hi;
    t.values.assign(n, 1);
    if (opt.with_spf) t.spf.assign(n, 0);
    if (k == 1 && !opt.with_spf) return t;

    std::uint64_t root = isqrt(hi);
    auto base = primes_up_to(std::uint32_t(root));
    // d_k(p^e) for small e, shared read-only
    std::vector<std::uint64_t> dpe(std::bit_width(hi) + 1);
    for (unsigned e = 0; e < dpe.size(); ++e) dpe[e] = dk_prime_power(k, e);

    std::size_t chunks = chunk_count(lo, hi + 1, opt.segment);
    for_each_chunk(chunks, [&](std::size_t c) {
        auto [a, b] = chunk_at(lo, hi + 1, opt.segment, c);
        std::size_t len = b - a;
        std::vector<std::uint64_t> rem(len);
        std::vector<std::uint64_t> val(len, 1);
        for (std::size_t i = 0; i < len; ++i) rem[i] = a + i;
        for (std::uint32_t p : base) {
            std::uint64_t start = (a + p - 1) / p * p;
            for (std::uint64_t m = start; m < b; m += p) {
                std::size_t i = m - a;
                unsigned e = 0;
                do {
                    rem[i] /= p;
                    ++e;
                } while (rem[i] % p == 0);
                val[i] *= dpe[e];
                if (opt.with_spf && t.spf[m - lo] == 0) t.spf[m - lo] = p;
            }
        }
        for (std::size_t i = 0; i < len; ++i) {
            std::uint64_t m = a + i;
            if (rem[i] > 1) {
                val[i] *= k;
                if (opt.with_spf && t.spf[m - lo] == 0) t.spf[m - lo] = rem[i] <= 0xffffffffu ? std::uint32_t(rem[i]) : 0;
            }
            if (m == 1 && opt.with_spf) t.spf[0] = 1;
            if (val[i] > 0xffffffffu) fail(ErrorKind::arithmetic, "sieve_dk: value exceeds 32 bits");
            t.values[m - lo] = std::uint32_t(val[i]);
        }
    });
    return t;
}

void dump_table(const DivisorTable& t, const std::filesystem::path& file) {
    std::ofstream out(file, std::ios::binary);
    if (!out) fail(ErrorKind::resource, "cannot write " + file.string());
    out.write(magic, sizeof magic);
    put_le<std::uint32_t>(out, t.k);
    put_le<std::uint64_t>(out, t.lo);
    put_le<std::uint64_t>(out, t.hi);
    put_le<std::uint32_t>(out, 4);
    for (auto v : t.values) put_le<std::uint32_t>(out, v);
    if (!out) fail(ErrorKind::resource, "write failed for " + file.string());
}

DivisorTable load_table(const std::filesystem::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in) fail(ErrorKind::resource, "cannot read " + file.string());
    char m[8];
    in.read(m, 8);
    if (!in || std::memcmp(m, magic, 8) != 0) fail(ErrorKind::resource, "bad divisor table header");
    DivisorTable t;
    t.k = get_le<std::uint32_t>(in);
    t.lo = get_le<std::uint64_t>(in);
    t.hi = get_le<std::uint64_t>(in);
    auto width = get_le<std::uint32_t>(in);
    if (width != 4 || t.hi < t.lo) fail(ErrorKind::resource, "unsupported divisor table layout");
    t.values.resize(t.hi - t.lo + 1);
    for (auto& v : t.values) v = get_le<std::uint32_t>(in);
    return t;
}

std::string table_cache_name(unsigned k, std::uint64_t lo, std::uint64_t hi, unsigned width) {
    // FNV-1a over the little-endian key fields
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&](std::uint64_t v, int bytes) {
        for (int i = 0; i < bytes; ++i) {
            h ^= (v >> (8 * i)) & 0xff;
            h *= 1099511628211ull;
        }
    };
    mix(k, 4);
    mix(lo, 8);
    mix(hi, 8);
    mix(width, 4);
    char buf[32];
    std::snprintf(buf, sizeof buf, "dk_%016llx.bin", (unsigned long long)h);
    return buf;
}

DivisorTable cached_sieve_dk(unsigned k, std::uint64_t lo, std::uint64_t hi, const std::filesystem::path& cache_dir) {
    auto file = cache_dir / table_cache_name(k, lo, hi);
    if (std::filesystem::exists(file)) {
        auto t = load_table(file);
        if (t.k == k && t.lo == lo && t.hi == hi) return t;
    }
    SieveOptions opt;
    opt.with_spf = false;
    auto t = sieve_dk(k, lo, hi, opt);
    std::filesystem::create_directories(cache_dir);
    dump_table(t, file);
    return t;
}

}  // namespace adsum
