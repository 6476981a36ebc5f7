#pragma once

#include "adsum/arith/divisor_table.hpp"
#include "adsum/arith/factor.hpp"

#include <array>
#include <cstdint>
#include <vector>

#include "adsum/real.hpp"

namespace adsum {

// d_k(n, A): sum of d_{k-1}(q) over divisors q of n with q^b <= n^a.
// Uses the spf column of ctx when n lies in its range, otherwise factorizes n.
std::uint64_t dk_partial(std::uint64_t n, unsigned k, const RationalExponent& A, const DivisorTable* ctx = nullptr);

// d_{k}(n, A) for 1 <= n <= hi, index n (entry 0 unused). A = 1 reduces to sieve_dk.
struct PartialTable {
    unsigned k = 1;
    RationalExponent A;
    std::uint64_t hi = 0;
    std::vector<std::uint32_t> values;

    std::uint32_t operator[](std::uint64_t n) const { return values[n]; }
    std::uint32_t max_value() const;
};

PartialTable sieve_dk_partial(unsigned k, const RationalExponent& A, std::uint64_t hi, const SieveOptions& opt = {});

// (sigma_{-1}(h), sum_{d|h} log d / d, sum_{d|h} log^2 d / d)
std::array<Real, 3> sigma_moments(std::uint64_t h);

}  // namespace adsum
