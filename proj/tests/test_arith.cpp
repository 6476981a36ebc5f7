#include "adsum/arith/divisor_table.hpp"
#include "adsum/arith/partial.hpp"
#include "adsum/errors.hpp"
#include "adsum/parallel.hpp"

#include <doctest.h>

#include <filesystem>
#include <random>

using namespace adsum;

namespace {

std::uint64_t brute_dk(std::uint64_t n, unsigned k) {
    if (k == 1) return 1;
    std::uint64_t s = 0;
    for (std::uint64_t d = 1; d <= n; ++d)
        if (n % d == 0) s += brute_dk(d, k - 1);
    return s;
}

}  // namespace

TEST_CASE("factorization") {
    auto f = factorize(360);
    REQUIRE(f.factors.size() == 3);
    CHECK(f.factors[0] == PrimePower{2, 3});
    CHECK(f.factors[1] == PrimePower{3, 2});
    CHECK(f.factors[2] == PrimePower{5, 1});
    auto g = factorize(1000000007ull * 998244353ull);
    REQUIRE(g.factors.size() == 2);
    CHECK(g.factors[0].p == 998244353ull);
    CHECK(g.factors[1].p == 1000000007ull);
    CHECK(is_prime(2305843009213693951ull));
    CHECK_FALSE(is_prime(2305843009213693953ull));
    CHECK(factorize(1).factors.empty());
    CHECK(euler_phi(factorize(36)) == 12);
    CHECK(divisors(factorize(12)) == std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12});
}

TEST_CASE("d_k at prime powers") {
    CHECK(dk_prime_power(2, 5) == 6);
    CHECK(dk_prime_power(3, 2) == 6);
    CHECK(dk_prime_power(1, 9) == 1);
    CHECK(dk_prime_power(0, 0) == 1);
    CHECK(dk_prime_power(0, 3) == 0);
    CHECK_THROWS_AS(dk_prime_power(40, 60), Error);
    for (unsigned k = 1; k <= 4; ++k)
        for (std::uint64_t n : {1, 12, 30, 64, 97, 360}) CHECK(dk_value(factorize(n), k) == brute_dk(n, k));
}

TEST_CASE("rational exponents and exact boundaries") {
    auto A = RationalExponent::parse("2/4");
    CHECK(A.a == 1);
    CHECK(A.b == 2);
    CHECK(A.str() == "1/2");
    CHECK_THROWS_AS(RationalExponent::parse("0.5"), Error);
    CHECK_THROWS_AS(RationalExponent::parse("1/0"), Error);
    CHECK(root_floor(100, A) == 10);
    CHECK(root_floor(99, A) == 9);
    CHECK(root_threshold(10, A) == 100);
    CHECK(root_threshold(11, A) == 121);
    RationalExponent t(2, 3);
    // q^{3/2} integral exactly for squares
    CHECK(inverse_root_is_integer(4, t));
    CHECK_FALSE(inverse_root_is_integer(2, t));
    CHECK(compare_powers(8, 2, 4, 3) == 0);
    CHECK(compare_powers(3, 2, 2, 3) > 0);
    // 2^{64} vs (2^{32})^2 through the wide path
    CHECK(compare_powers(std::uint64_t(1) << 32, 2, 2, 64) == 0);
}

TEST_CASE("sieve agrees with factorization") {
    for (unsigned k = 1; k <= 5; ++k) {
        auto t = sieve_dk(k, 1, 3000);
        for (std::uint64_t n = 1; n <= 3000; ++n) REQUIRE(t[n] == dk_value(factorize(n), k));
    }
    auto w = sieve_dk(3, 1000000, 1020000);
    for (std::uint64_t n = 1000000; n <= 1020000; n += 37) CHECK(w[n] == dk_value(factorize(n), 3));
    CHECK(w.has_spf());
}

TEST_CASE("sieve is independent of the thread count") {
    set_thread_count(1);
    auto a = sieve_dk(3, 1, 600000);
    auto pa = sieve_dk_partial(2, RationalExponent(1, 3), 600000);
    set_thread_count(3);
    auto b = sieve_dk(3, 1, 600000);
    auto pb = sieve_dk_partial(2, RationalExponent(1, 3), 600000);
    set_thread_count(1);
    CHECK(a.values == b.values);
    CHECK(pa.values == pb.values);
}

TEST_CASE("partial divisor function") {
    for (auto A : {RationalExponent(1, 2), RationalExponent(1, 3), RationalExponent(2, 3), RationalExponent(1, 1)})
        for (unsigned k = 1; k <= 3; ++k) {
            auto t = sieve_dk_partial(k, A, 2500);
            for (std::uint64_t n = 1; n <= 2500; ++n) REQUIRE(t[n] == dk_partial(n, k, A));
        }
    // d_2(n) = 2 d_2(n, 1/2) - [n square]
    auto full = sieve_dk(2, 1, 10000);
    auto half = sieve_dk_partial(2, RationalExponent(1, 2), 10000);
    for (std::uint64_t n = 1; n <= 10000; ++n) {
        std::uint64_t r = root_floor(n, RationalExponent(1, 2));
        REQUIRE(full[n] == 2 * half[n] - (r * r == n ? 1 : 0));
    }
    CHECK(dk_partial(12, 2, RationalExponent(0, 1)) == 1);
}

TEST_CASE("partial divisor function at prime powers") {
    // d_3(2^alpha, 1/2) counts divisors 2^j with j <= alpha/2, weighted by d_2(2^j) = j + 1
    for (unsigned alpha = 20; alpha <= 60; ++alpha) {
        std::uint64_t n = std::uint64_t(1) << alpha;
        std::uint64_t m = alpha / 2;
        CHECK(dk_partial(n, 3, RationalExponent(1, 2)) == (m + 1) * (m + 2) / 2);
        double ratio = double(dk_partial(n, 3, RationalExponent(1, 2))) / double(dk_prime_power(3, alpha));
        CHECK(std::abs(ratio - 0.25) <= 3.0 / alpha);
    }
}

TEST_CASE("table dump and cache") {
    auto dir = std::filesystem::temp_directory_path() / "adsum_unit_cache";
    std::filesystem::remove_all(dir);
    auto t = sieve_dk(2, 5, 5000);
    auto file = dir / "t.bin";
    std::filesystem::create_directories(dir);
    dump_table(t, file);
    auto u = load_table(file);
    CHECK(u.k == 2);
    CHECK(u.lo == 5);
    CHECK(u.hi == 5000);
    CHECK(u.values == t.values);
    CHECK(table_cache_name(2, 5, 5000) != table_cache_name(3, 5, 5000));
    auto c1 = cached_sieve_dk(3, 1, 20000, dir);
    CHECK(std::filesystem::exists(dir / table_cache_name(3, 1, 20000)));
    auto c2 = cached_sieve_dk(3, 1, 20000, dir);
    CHECK(c1.values == c2.values);
    std::filesystem::remove_all(dir);
    CHECK_THROWS_AS(load_table(dir / "missing.bin"), Error);
}

TEST_CASE("sigma moments") {
    auto m = sigma_moments(6);
    CHECK(abs(m[0] - 2) < Real(1e-30));
    Real expect = log(Real(2)) / 2 + log(Real(3)) / 3 + log(Real(6)) / 6;
    CHECK(abs(m[1] - expect) < Real(1e-30));
    CHECK_THROWS_AS(sigma_moments(0), Error);
}
