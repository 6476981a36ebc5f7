#include "adsum/arith/factor.hpp"

#include "adsum/errors.hpp"
#include "adsum/real.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>

namespace adsum {

namespace {

using boost::multiprecision::cpp_int;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) { return std::uint64_t(u128(a) * b % m); }

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

std::uint64_t pollard_brent(std::uint64_t n) {
    if (n % 2 == 0) return 2;
    for (std::uint64_t c = 1;; ++c) {
        std::uint64_t y = 2, x = 2, g = 1, q = 1, ys = 2;
        const std::uint64_t m = 128;
        std::uint64_t r = 1;
        auto f = [&](std::uint64_t v) { return (mulmod(v, v, n) + c) % n; };
        do {
            x = y;
            for (std::uint64_t i = 0; i < r; ++i) y = f(y);
            std::uint64_t k = 0;
            do {
                ys = y;
                for (std::uint64_t i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    q = mulmod(q, x > y ? x - y : y - x, n);
                }
                g = std::gcd(q, n);
                k += m;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                g = std::gcd(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void split(std::uint64_t n, std::vector<std::uint64_t>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    std::uint64_t d = pollard_brent(n);
    split(d, out);
    split(n / d, out);
}

}  // namespace

bool FactoredInteger::valid() const {
    if (value == 0) return false;
    u128 prod = 1;
    std::uint64_t prev = 1;
    for (auto [p, e] : factors) {
        if (p <= prev || e == 0 || !is_prime(p)) return false;
        prev = p;
        for (unsigned i = 0; i < e; ++i) {
            prod *= p;
            if (prod > value) return false;
        }
    }
    return prod == value;
}

unsigned FactoredInteger::exponent_of(std::uint64_t p) const {
    for (auto& f : factors)
        if (f.p == p) return f.e;
    return 0;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // deterministic witness set for 64-bit inputs
    for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

FactoredInteger factorize(std::uint64_t n, std::uint64_t bound) {
    if (n < 1 || n > bound) fail(ErrorKind::range, "factorize: n out of range");
    FactoredInteger f;
    f.value = n;
    std::vector<std::uint64_t> primes;
    for (std::uint64_t p = 2; p < 1000 && p * p <= n; p += (p == 2 ? 1 : 2)) {
        while (n % p == 0) {
            primes.push_back(p);
            n /= p;
        }
    }
    if (n > 1) split(n, primes);
    std::sort(primes.begin(), primes.end());
    for (std::uint64_t p : primes) {
        if (!f.factors.empty() && f.factors.back().p == p)
            ++f.factors.back().e;
        else
            f.factors.push_back({p, 1});
    }
    return f;
}

std::uint64_t dk_prime_power(unsigned k, unsigned alpha) {
    if (k == 0) return alpha == 0 ? 1 : 0;
    // C(alpha+k-1, alpha) built incrementally; each partial product is itself a binomial
    u128 r = 1;
    for (unsigned i = 1; i <= alpha; ++i) {
        r = r * (k - 1 + i) / i;
        if (r > ~std::uint64_t(0)) fail(ErrorKind::arithmetic, "dk_prime_power: overflow");
    }
    return std::uint64_t(r);
}

std::uint64_t dk_value(const FactoredInteger& f, unsigned k) {
    u128 r = 1;
    for (auto [p, e] : f.factors) {
        r *= dk_prime_power(k, e);
        if (r > ~std::uint64_t(0)) fail(ErrorKind::arithmetic, "dk_value: overflow");
    }
    if (k == 0) return f.value == 1 ? 1 : 0;
    return std::uint64_t(r);
}

std::vector<std::uint64_t> divisors(const FactoredInteger& f) {
    std::vector<std::uint64_t> d{1};
    for (auto [p, e] : f.factors) {
        std::size_t n = d.size();
        std::uint64_t pk = 1;
        for (unsigned i = 1; i <= e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < n; ++j) d.push_back(d[j] * pk);
        }
    }
    std::sort(d.begin(), d.end());
    return d;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

std::uint64_t euler_phi(const FactoredInteger& f) {
    std::uint64_t r = f.value;
    for (auto [p, e] : f.factors) r = r / p * (p - 1);
    return r;
}

RationalExponent::RationalExponent(std::uint64_t num, std::uint64_t den) {
    if (den == 0) fail(ErrorKind::domain, "rational exponent: zero denominator");
    if (num > den) fail(ErrorKind::domain, "rational exponent outside [0,1]");
    std::uint64_t g = std::gcd(num, den);
    if (g == 0) g = 1;
    num /= g;
    den /= g;
    if (num == 0) den = 1;
    if (den > 0xffffffffu) fail(ErrorKind::domain, "rational exponent: denominator too large");
    a = std::uint32_t(num);
    b = std::uint32_t(den);
}

RationalExponent RationalExponent::parse(const std::string& text) {
    auto slash = text.find('/');
    auto num_part = text.substr(0, slash);
    auto den_part = slash == std::string::npos ? std::string("1") : text.substr(slash + 1);
    std::uint64_t num = 0, den = 0;
    auto r1 = std::from_chars(num_part.data(), num_part.data() + num_part.size(), num);
    auto r2 = std::from_chars(den_part.data(), den_part.data() + den_part.size(), den);
    if (r1.ec != std::errc() || r1.ptr != num_part.data() + num_part.size() || r2.ec != std::errc() ||
        r2.ptr != den_part.data() + den_part.size() || num_part.empty() || den_part.empty())
        fail(ErrorKind::config, "not a rational a/b: '" + text + "'");
    return RationalExponent(num, den);
}

std::string RationalExponent::str() const { return std::to_string(a) + "/" + std::to_string(b); }

int compare_powers(std::uint64_t x, unsigned ex, std::uint64_t y, unsigned ey) {
    if (ex == 0 || x == 1) {
        if (ey == 0 || y == 1) return 0;
        return y == 0 ? 1 : -1;
    }
    if (ey == 0 || y == 1) return x == 0 ? -1 : 1;
    long double lx = ex * std::log2l((long double)x), ly = ey * std::log2l((long double)y);
    long double gap = lx - ly;
    if (gap > 1e-6L * (1 + std::fabs(lx))) return 1;
    if (gap < -1e-6L * (1 + std::fabs(lx))) return -1;
    if (lx < 127 && ly < 127) {
        u128 px = 1, py = 1;
        for (unsigned i = 0; i < ex; ++i) px *= x;
        for (unsigned i = 0; i < ey; ++i) py *= y;
        return px < py ? -1 : (px > py ? 1 : 0);
    }
    cpp_int px = boost::multiprecision::pow(cpp_int(x), ex);
    cpp_int py = boost::multiprecision::pow(cpp_int(y), ey);
    return px < py ? -1 : (px > py ? 1 : 0);
}

std::uint64_t root_floor(std::uint64_t n, const RationalExponent& A) {
    if (n == 0) fail(ErrorKind::range, "root_floor: n = 0");
    if (A.a == 0) return 1;
    if (A.a == A.b) return n;
    auto est = (std::uint64_t)std::floor(std::pow((long double)n, A.approx()));
    if (est < 1) est = 1;
    // q^b <= n^a
    while (est > 1 && compare_powers(est, A.b, n, A.a) > 0) --est;
    while (compare_powers(est + 1, A.b, n, A.a) <= 0) ++est;
    return est;
}

std::uint64_t root_threshold(std::uint64_t q, const RationalExponent& A) {
    if (q <= 1) return 1;
    if (A.a == 0) return 0;
    if (A.a == A.b) return q;
    long double e = (long double)A.b / A.a;
    long double v = std::pow((long double)q, e);
    if (v > 1.8e19L) fail(ErrorKind::range, "root_threshold: result exceeds 64 bits");
    auto est = (std::uint64_t)std::ceil(v);
    if (est < 1) est = 1;
    while (est > 1 && compare_powers(q, A.b, est - 1, A.a) <= 0) --est;
    while (compare_powers(q, A.b, est, A.a) > 0) ++est;
    return est;
}

bool inverse_root_is_integer(std::uint64_t q, const RationalExponent& A) {
    if (A.a == 0) fail(ErrorKind::domain, "inverse root with A = 0");
    // q^(b/a) is an integer iff q is a perfect a-th power
    std::uint64_t t = root_threshold(q, A);
    return compare_powers(q, A.b, t, A.a) == 0;
}

}  // namespace adsum
