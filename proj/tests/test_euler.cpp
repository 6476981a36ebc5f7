#include "adsum/arith/partial.hpp"
#include "adsum/errors.hpp"
#include "adsum/euler/euler.hpp"

#include <boost/math/constants/constants.hpp>
#include <doctest.h>

using namespace adsum;

TEST_CASE("C_{2,2} f_{2,2}(h) is the divisor sum") {
    const Real pi = boost::math::constants::pi<Real>();
    auto C = singular_C(2, 2, 100000);
    CHECK(abs(C.value - 6 / (pi * pi)) < Real(1e-25));
    for (std::uint64_t h = 1; h <= 100; ++h)
        CHECK(abs(singular_f(factorize(h), 2, 2) - sigma_moments(h)[0]) < Real(1e-10));
}

TEST_CASE("bracketed and expanded local factors of C agree") {
    for (std::uint64_t p : {2, 3, 11, 101})
        for (unsigned k : {2u, 3u})
            for (unsigned l : {2u, 3u})
                for (double s : {1.0, 1.3})
                    for (double w : {0.0, 0.2}) {
                        Real a = c_factor_bracketed(p, k, l, Real(s), Real(w));
                        Real b = c_factor_expanded(p, k, l, Real(s), Real(w));
                        CHECK(abs(a - b) < Real(1e-28));
                    }
}

TEST_CASE("varphi is multiplicative") {
    auto h = factorize(12);
    auto t = varphi_table(h, 3, 2, 100, 3);
    CHECK(t[1].order() == 3);
    CHECK(abs(t[1][0] - 1) < Real(1e-30));
    for (std::uint64_t r = 2; r <= 100; ++r)
        for (std::uint64_t u = 2; r * u <= 100; ++u) {
            if (gcd_u64(r, u) != 1) continue;
            auto prod = t[r] * t[u];
            for (int i = 0; i <= 3; ++i) {
                Real lhs = t[r * u].order() >= i ? t[r * u][i] : Real(0);
                Real rhs = prod.order() >= i ? prod[i] : Real(0);
                CHECK(abs(lhs - rhs) < Real(1e-28));
            }
        }
    // vanishes for p not dividing h and alpha >= l
    auto z = varphi_local(0, 2, 2, 5, 2, 2);
    for (int i = 0; i <= 2; ++i) CHECK(abs(z[i]) < Real(1e-30));
}

TEST_CASE("three routes to C f") {
    for (auto [k, l] : {std::pair{2u, 2u}, {2u, 3u}, {3u, 3u}})
        for (std::uint64_t h : {1, 2, 6, 12}) {
            auto hf = factorize(h);
            Real closed = singular_C(k, l, 100000).value * singular_f(hf, k, l);
            auto jet = euler_product_jet(hf, k, l, default_orders(k, l), 100000);
            CHECK(abs(jet.value(0, 0) - closed) < Real(1e-20) + jet.tail_bound);
            auto d = dirichlet_partials(hf, k, l, 100000, default_orders(k, l));
            CHECK(abs(d.partials(0, 0) - closed) < 4 * d.tail_estimate + Real(1e-12));
        }
}

TEST_CASE("display form of f agrees at s = 1 only") {
    JetOrders o{2, 2};
    for (std::uint64_t p : {2, 3, 5}) {
        auto a = local_factor_jet(p, 1, 2, 2, o, FForm::summand);
        auto b = local_factor_jet(p, 1, 2, 2, o, FForm::display);
        for (int j = 0; j <= 2; ++j) CHECK(abs(a(0, j) - b(0, j)) < Real(1e-28));
        CHECK(abs(a(1, 0) - b(1, 0)) > Real(1e-6));
    }
}

TEST_CASE("Euler jet is independent of the tail method to the stated bound") {
    auto hf = factorize(6);
    auto a = euler_product_jet(hf, 2, 2, default_orders(2, 2), 100000, FForm::summand, TailMethod::prime_zeta);
    auto b = euler_product_jet(hf, 2, 2, default_orders(2, 2), 100000, FForm::summand, TailMethod::prime_counting_integral);
    auto c = euler_product_jet(hf, 2, 2, default_orders(2, 2), 1000000, FForm::summand, TailMethod::prime_zeta);
    for (int i = 0; i <= 2; ++i)
        for (int j = 0; j <= 2; ++j) {
            CHECK(abs(a.value(i, j) - c.value(i, j)) < Real(1e-20) + a.tail_bound);
            CHECK(abs(b.value(i, j) - c.value(i, j)) < b.tail_bound);
        }
    CHECK_THROWS_AS(singular_C(2, 2, 1), Error);
}
