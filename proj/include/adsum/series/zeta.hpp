#pragma once

#include "adsum/real.hpp"
#include "adsum/series/jet2.hpp"

#include <boost/math/special_functions/bernoulli.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <array>
#include <cmath>
#include <limits>
#include <vector>

namespace adsum {

struct EulerMaclaurinPlan {
    int N = 40;  // terms summed directly
    int J = 40;  // Bernoulli correction terms
};

// gamma_m = sum_{n<N} (log n)^m / n + f(N)/2 - (log N)^{m+1}/(m+1) - sum_j B_{2j}/(2j)! f^{(2j-1)}(N)
// with f(x) = (log x)^m / x and f^{(r)}(x) = x^{-1-r} P_r(log x), P_{r+1} = P_r' - (r+1) P_r.
// err_out receives the magnitude of the first omitted correction plus rounding.
template <class T>
std::vector<T> stieltjes_em(int M, const EulerMaclaurinPlan& plan, std::vector<T>* err_out = nullptr) {
    const int N = plan.N, J = plan.J;
    std::vector<T> out(M + 1), err(M + 1);
    const T logN = log(T(N));
    std::vector<T> logs(N);
    for (int n = 1; n < N; ++n) logs[n] = log(T(n));
    const T eps = std::numeric_limits<T>::epsilon();
    for (int m = 0; m <= M; ++m) {
        T sum(0), mag(0);
        for (int n = 1; n < N; ++n) {
            T t = pow(logs[n], m) / T(n);
            sum += t;
            mag += abs(t);
        }
        T fN = pow(logN, m) / T(N);
        T integral = pow(logN, m + 1) / T(m + 1);
        sum += fN / 2 - integral;
        mag += abs(integral);
        // P_r as coefficient vector in L
        std::vector<T> P(m + 1, T(0));
        P[m] = T(1);
        auto evalP = [&](const std::vector<T>& poly) {
            T v(0);
            for (int d = int(poly.size()) - 1; d >= 0; --d) v = v * logN + poly[d];
            return v;
        };
        auto step = [&](int r) {
            std::vector<T> Q(m + 1, T(0));
            for (int d = 1; d <= m; ++d) Q[d - 1] += T(d) * P[d];
            for (int d = 0; d <= m; ++d) Q[d] -= T(r + 1) * P[d];
            P.swap(Q);
        };
        int r = 0;
        T last(0);
        for (int j = 1; j <= J + 1; ++j) {
            while (r < 2 * j - 1) step(r++);
            T fr = evalP(P) / pow(T(N), 2 * j);  // x^{-1-r} with r = 2j-1
            T fact(1);
            for (int t = 2; t <= 2 * j; ++t) fact *= t;
            T term = boost::math::bernoulli_b2n<T>(j) / fact * fr;
            if (j == J + 1) {
                last = abs(term);
                break;
            }
            sum -= term;
            mag += abs(term);
        }
        out[m] = sum;
        err[m] = last + mag * eps * T(4 * N);
    }
    if (err_out) *err_out = err;
    return out;
}

// Taylor expansion of zeta(sigma0 + t) in t, sigma0 > 1, by Euler-Maclaurin with series coefficients.
template <class T>
Series<T> zeta_taylor_at(const T& sigma0, int order, const EulerMaclaurinPlan& plan = {20, 20}) {
    const int N = plan.N, J = plan.J;
    Series<T> z(order);
    for (int n = 1; n < N; ++n) {
        T L = log(T(n));
        z += Series<T>::exp_linear(order, -sigma0 * L, -L);
    }
    T LN = log(T(N));
    // N^{1-s}/(s-1)
    auto Npow = Series<T>::exp_linear(order, (T(1) - sigma0) * LN, -LN);
    Series<T> sm1(order, sigma0 - 1);
    if (order >= 1) sm1[1] = T(1);
    z += Npow / sm1;
    auto Nms = Series<T>::exp_linear(order, -sigma0 * LN, -LN);
    z += Nms * T(0.5);
    // rising factorial s(s+1)...(s+2j-2) times N^{-s-2j+1}
    Series<T> rising(order, T(1));
    T fact(1);
    for (int j = 1; j <= J; ++j) {
        for (int i = (j == 1 ? 0 : 2 * j - 3); i <= 2 * j - 2; ++i) {
            Series<T> lin(order, sigma0 + T(i));
            if (order >= 1) lin[1] = T(1);
            rising = rising * lin;
        }
        fact *= T(2 * j - 1) * T(2 * j);
        auto term = rising * Nms * (boost::math::bernoulli_b2n<T>(j) / fact / pow(T(N), 2 * j - 1));
        z += term;
    }
    return z;
}

using HighReal = boost::multiprecision::cpp_bin_float_50;

struct StieltjesTable {
    std::vector<Real> gammas;
    std::vector<HighReal> gammas_high;  // internal 50-digit values
    int digits = 0;
};

// gamma_0..gamma_M with at least `digits` correct digits (absolute, scaled by max(1,|gamma_m|)).
// Evaluated at 50 digits internally; digits above 45 are a precision error.
StieltjesTable stieltjes_constants(int M, int digits = 30);

// Shared table used by the coefficient machinery (M = 30).
const StieltjesTable& stieltjes_default();

// (s-1) zeta(s) as a series in s-1
Taylor unit_laurent(int order);

// a_0(j)..a_R(j): r! [ (s-1)^r ] ((s-1) zeta(s))^j
std::vector<Real> zeta_power_taylor(int j, int R);

// c_n(j) = sum_{r<=n} (-1)^{n-r} a_r(j)/r!
std::vector<Real> c_coeffs(int j, int N);

// Same numbers by dividing ((s-1) zeta)^j by s = 1 + (s-1) as series.
std::vector<Real> c_coeffs_by_division(int j, int N);

// zeta(2), zeta'(2), zeta''(2)
std::array<Real, 3> zeta_at_two();

// Derivatives of 1/zeta at s=2: a' = -sum mu(n) log n/n^2, a'' = sum mu(n) log^2 n / n^2
struct MobiusConstants {
    Real a1, a2;
};
MobiusConstants mobius_constants_closed();

// Prime zeta P(sigma0 + t) = sum_p p^{-sigma0-t} as a series in t, sigma0 >= 2.
Taylor prime_zeta_taylor(int sigma0, int order);

}  // namespace adsum
