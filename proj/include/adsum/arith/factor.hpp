#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace adsum {

struct PrimePower {
    std::uint64_t p;
    unsigned e;
    bool operator==(const PrimePower&) const = default;
};

struct FactoredInteger {
    std::uint64_t value = 1;
    std::vector<PrimePower> factors;  // primes strictly increasing

    bool valid() const;
    // exponent of p in value, 0 if p does not divide it
    unsigned exponent_of(std::uint64_t p) const;
};

inline constexpr std::uint64_t default_factor_bound = (std::uint64_t(1) << 63) - 1;

FactoredInteger factorize(std::uint64_t n, std::uint64_t bound = default_factor_bound);

bool is_prime(std::uint64_t n);

// d_k(p^alpha) = C(alpha+k-1, k-1); arithmetic error if the result exceeds 64 bits
std::uint64_t dk_prime_power(unsigned k, unsigned alpha);

// d_k(n) from a factorization; k = 0 gives the indicator of n = 1
std::uint64_t dk_value(const FactoredInteger& f, unsigned k);

std::vector<std::uint64_t> divisors(const FactoredInteger& f);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t euler_phi(const FactoredInteger& f);

// A = a/b in lowest terms with 0 <= A <= 1
struct RationalExponent {
    std::uint32_t a = 1, b = 1;

    RationalExponent() = default;
    RationalExponent(std::uint64_t num, std::uint64_t den);

    static RationalExponent parse(const std::string& text);
    std::string str() const;
    long double approx() const { return static_cast<long double>(a) / b; }
    bool operator==(const RationalExponent&) const = default;
};

// Exact comparison of x^ex against y^ey: negative, zero or positive.
int compare_powers(std::uint64_t x, unsigned ex, std::uint64_t y, unsigned ey);

// Largest q with q^b <= n^a (i.e. floor(n^A)); n >= 1.
std::uint64_t root_floor(std::uint64_t n, const RationalExponent& A);

// Smallest n >= 1 with q^b <= n^a, or 0 when no such n exists (a = 0, q > 1).
std::uint64_t root_threshold(std::uint64_t q, const RationalExponent& A);

// Whether q^(1/A) is an integer.
bool inverse_root_is_integer(std::uint64_t q, const RationalExponent& A);

}  // namespace adsum
