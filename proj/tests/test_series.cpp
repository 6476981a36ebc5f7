#include "adsum/asym/asym.hpp"
#include "adsum/errors.hpp"
#include "adsum/series/jet2.hpp"
#include "adsum/series/zeta.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <doctest.h>

#include <cmath>

using namespace adsum;

TEST_CASE("univariate series") {
    auto t = Taylor::variable(8);
    auto one_plus = t + Real(1);
    auto back = one_plus.log_series().exp_series();
    for (int n = 0; n <= 8; ++n) CHECK(abs(back[n] - one_plus[n]) < Real(1e-30));
    auto q = (one_plus * one_plus) / one_plus;
    for (int n = 0; n <= 8; ++n) CHECK(abs(q[n] - one_plus[n]) < Real(1e-30));
    auto cube = one_plus.pow_int(3);
    CHECK(abs(cube[2] - 3) < Real(1e-30));
    auto inv = one_plus.pow_int(-1);
    CHECK(abs(inv[5] + 1) < Real(1e-30));
    CHECK_THROWS_AS(Taylor::variable(3).inverse(), Error);
    CHECK_THROWS_AS((t + Real(-1)).log_series(), Error);
}

TEST_CASE("jet partials match finite differences") {
    const int S = 3, W = 3;
    auto X = Jet2::var_s(S, W), Y = Jet2::var_w(S, W);
    // f = log(2 + X + 3Y + XY) exp(X - 2Y + X^2) / (1 + Y)
    auto F = log(Real(2) + X + Real(3) * Y + X * Y) * exp(X - Real(2) * Y + X * X) / (Real(1) + Y);
    auto f = [](double x, double y) { return std::log(2 + x + 3 * y + x * y) * std::exp(x - 2 * y + x * x) / (1 + y); };
    const double h = 1e-4;
    double ds = (f(h, 0) - f(-h, 0)) / (2 * h);
    double dw = (f(0, h) - f(0, -h)) / (2 * h);
    double dsw = (f(h, h) - f(h, -h) - f(-h, h) + f(-h, -h)) / (4 * h * h);
    CHECK(std::abs(double(F.partial(0, 0)) - f(0, 0)) < 1e-15);
    CHECK(std::abs(double(F.partial(1, 0)) - ds) < 10 * h * h);
    CHECK(std::abs(double(F.partial(0, 1)) - dw) < 10 * h * h);
    CHECK(std::abs(double(F.partial(1, 1)) - dsw) < 100 * h * h);
    // power against repeated product
    auto P = (Real(1) + X + Y).pow_int(3);
    auto Q = (Real(1) + X + Y) * (Real(1) + X + Y) * (Real(1) + X + Y);
    for (int i = 0; i <= S; ++i)
        for (int j = 0; j <= W; ++j) CHECK(abs(P(i, j) - Q(i, j)) < Real(1e-30));
}

TEST_CASE("Stieltjes constants against a 100-digit evaluation") {
    using Big = boost::multiprecision::cpp_bin_float_100;
    auto big = stieltjes_em<Big>(8, EulerMaclaurinPlan{40, 70});
    const auto& tab = stieltjes_default();
    for (int m = 0; m <= 8; ++m) {
        Real diff = abs(tab.gammas[m] - Real(big[m].str(40)));
        CHECK(diff < Real(1e-30) * std::max(Real(1), abs(tab.gammas[m])));
    }
    CHECK(abs(tab.gammas[0] - boost::math::constants::euler<Real>()) < Real(1e-32));
    CHECK_THROWS_AS(stieltjes_constants(10, 48), Error);
}

TEST_CASE("zeta powers and c coefficients") {
    for (int j = 1; j <= 6; ++j) {
        CHECK(abs(zeta_power_taylor(j, 3)[0] - 1) < Real(1e-30));
        CHECK(abs(c_coeffs(j, 3)[0] - 1) < Real(1e-30));
    }
    for (int j = 1; j <= 5; ++j) {
        auto a = c_coeffs(j, 6), b = c_coeffs_by_division(j, 6);
        for (int n = 0; n <= 6; ++n) CHECK(abs(a[n] - b[n]) < Real(1e-20));
    }
    Real g = boost::math::constants::euler<Real>();
    CHECK(abs(c_coeffs(2, 2)[1] - (2 * g - 1)) < Real(1e-25));
    // a_1(1) is gamma_0 since (s-1) zeta(s) = 1 + gamma_0 (s-1) + ...
    CHECK(abs(zeta_power_taylor(1, 2)[1] - g) < Real(1e-30));
}

TEST_CASE("zeta near 2 and the prime zeta function") {
    const Real pi = boost::math::constants::pi<Real>();
    auto z = zeta_at_two();
    CHECK(abs(z[0] - pi * pi / 6) < Real(1e-30));
    auto direct = zeta_taylor_at(Real(2), 2);
    CHECK(abs(direct[1] - z[1]) < Real(1e-28));
    auto pz = prime_zeta_taylor(2, 2);
    // sum over primes below 10^5 plus a crude tail bound
    Real s = 0, s1 = 0;
    for (std::uint64_t p = 2; p < 100000; ++p) {
        bool prime = true;
        for (std::uint64_t d = 2; d * d <= p; ++d)
            if (p % d == 0) {
                prime = false;
                break;
            }
        if (!prime) continue;
        s += 1 / (Real(p) * Real(p));
        s1 -= log(Real(p)) / (Real(p) * Real(p));
    }
    CHECK(abs(pz[0] - s) < Real(1e-5));
    CHECK(pz[0] > s);
    CHECK(abs(pz[1] - s1) < Real(1e-4));
}

TEST_CASE("Moebius constants by three routes") {
    auto closed = mobius_constants_closed();
    auto direct = mobius_constants_direct(1000000);
    auto euler = mobius_constants_euler(1000000);
    CHECK(abs(direct.a1 - closed.a1) < std::max(direct.tail_bound, Real(1e-8)));
    CHECK(abs(euler.a1 - closed.a1) < Real(1e-8));
    CHECK(abs(euler.a2 - closed.a2) < Real(1e-8));
}
