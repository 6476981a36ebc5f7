#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace adsum {

struct SieveOptions {
    bool with_spf = true;
    std::uint64_t memory_budget = std::uint64_t(3) << 30;  // bytes
    std::uint64_t segment = std::uint64_t(1) << 18;
};

// d_k(n) for lo <= n <= hi. spf[n-lo] is the smallest prime factor (0 when it does
// not fit in 32 bits, 1 for n = 1).
struct DivisorTable {
    unsigned k = 1;
    std::uint64_t lo = 1, hi = 0;
    std::vector<std::uint32_t> values;
    std::vector<std::uint32_t> spf;

    bool contains(std::uint64_t n) const { return n >= lo && n <= hi; }
    std::uint32_t operator[](std::uint64_t n) const { return values[n - lo]; }
    std::uint32_t max_value() const;
    bool has_spf() const { return !spf.empty(); }
};

DivisorTable sieve_dk(unsigned k, std::uint64_t lo, std::uint64_t hi, const SieveOptions& opt = {});

// Primes up to n (simple sieve of Eratosthenes).
std::vector<std::uint32_t> primes_up_to(std::uint32_t n);

// Binary dump: magic, k, lo, hi, element width, then little-endian values.
void dump_table(const DivisorTable& t, const std::filesystem::path& file);
DivisorTable load_table(const std::filesystem::path& file);

// Cache file name derived from a content hash of (k, lo, hi, element width).
std::string table_cache_name(unsigned k, std::uint64_t lo, std::uint64_t hi, unsigned width = 4);

// Loads from cache_dir if present, otherwise sieves and stores. Loaded tables carry no spf.
DivisorTable cached_sieve_dk(unsigned k, std::uint64_t lo, std::uint64_t hi, const std::filesystem::path& cache_dir);

}  // namespace adsum
