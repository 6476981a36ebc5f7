#include "adsum/arith/partial.hpp"
#include "adsum/asym/asym.hpp"
#include "adsum/errors.hpp"
#include "adsum/parallel.hpp"
#include "adsum/series/zeta.hpp"

#include <boost/math/constants/constants.hpp>

#include <algorithm>
#include <cmath>

namespace adsum {

namespace {

// d(n) = 2 d(n,1/2) - [n square], so the Estermann coefficients are twice those at A = 1/2.
std::array<Real, 3> doubled(const AsymptoticPolynomial& P) {
    return {2 * P.coeffs[2], 2 * P.coeffs[1], 2 * P.coeffs[0]};
}

}  // namespace

std::array<Real, 3> estermann_closed(std::uint64_t h) {
    const Real pi = boost::math::constants::pi<Real>();
    const Real g = stieltjes_default().gammas[0];
    auto [s0, s1, s2] = sigma_moments(h);
    auto mc = mobius_constants_closed();
    const Real c = 6 / (pi * pi);
    const Real e = 2 * g - 1;
    std::array<Real, 3> out;
    out[0] = c * s0;
    out[1] = (2 * c * e + 4 * mc.a1) * s0 - 4 * c * s1;
    out[2] = (c * e * e + c + 4 * mc.a1 * e + 4 * mc.a2) * s0 - (4 * c * e + 8 * mc.a1) * s1 + 4 * c * s2;
    return out;
}

Real EstermannResult::max_gap() const {
    Real gap = 0;
    for (int i = 0; i < 3; ++i) {
        gap = std::max(gap, abs(assembled[i] - closed[i]));
        gap = std::max(gap, abs(assembled_euler[i] - closed[i]));
    }
    return gap;
}

EstermannResult estermann_coeffs(std::uint64_t h, std::uint64_t Q, std::uint64_t P, bool check) {
    if (h == 0) fail(ErrorKind::range, "estermann: h must be >= 1");
    const RationalExponent half(1, 2);
    auto hf = factorize(h);
    auto orders = default_orders(2, 2);
    EstermannResult r;
    r.h = h;
    r.Q = Q;
    r.P = P;
    r.closed = estermann_closed(h);

    auto d = dirichlet_partials(hf, 2, 2, Q, orders);
    r.assembled = doubled(assemble_polynomial(half, h, 2, 2, d.partials));
    // spread of the assembled coefficients over the upper-half checkpoints; assembly is linear in the jet
    r.tail_bound = 0;
    for (auto& rem : d.remainders)
        for (auto& c : doubled(assemble_polynomial(half, h, 2, 2, rem))) r.tail_bound = std::max(r.tail_bound, abs(c));

    auto e = euler_product_jet(hf, 2, 2, orders, P);
    r.assembled_euler = doubled(assemble_polynomial(half, h, 2, 2, e.value));
    // the assembly weights stay below 16 in absolute value for k = l = 2
    r.tail_bound = std::max(r.tail_bound, e.tail_bound * 16);
    if (check && !r.agrees(Real(1e-8)))
        fail(ErrorKind::consistency, "estermann h=" + std::to_string(h) + ": routes differ by " + to_string(r.max_gap(), 4) +
                                         " beyond tail bound " + to_string(r.tail_bound, 4));
    return r;
}

MobiusSum mobius_constants_direct(std::uint64_t N) {
    if (N < 10) fail(ErrorKind::range, "mobius sum: N too small");
    // linear sieve for mu
    std::vector<std::int8_t> mu(N + 1, 1);
    std::vector<std::uint32_t> primes;
    std::vector<bool> composite(N + 1, false);
    mu[1] = 1;
    for (std::uint64_t i = 2; i <= N; ++i) {
        if (!composite[i]) {
            primes.push_back(std::uint32_t(i));
            mu[i] = -1;
        }
        for (auto p : primes) {
            std::uint64_t ip = i * p;
            if (ip > N) break;
            composite[ip] = true;
            if (i % p == 0) {
                mu[ip] = 0;
                break;
            }
            mu[ip] = std::int8_t(-mu[i]);
        }
    }
    // fixed-order summation in blocks keeps the result schedule-independent
    const std::uint64_t block = 1 << 16;
    std::size_t nb = chunk_count(1, N + 1, block);
    std::vector<std::array<long double, 2>> parts(nb, {0.0L, 0.0L});
    std::vector<std::int64_t> mert(nb, 0);
    for_each_chunk(nb, [&](std::size_t b) {
        auto [lo, hi] = chunk_at(1, N + 1, block, b);
        long double s1 = 0, s2 = 0;
        std::int64_t m = 0;
        for (std::uint64_t n = lo; n < hi; ++n) {
            if (!mu[n]) continue;
            m += mu[n];
            if (n == 1) continue;
            long double L = std::log((long double)n);
            long double w = mu[n] * L / ((long double)n * (long double)n);
            s1 += w;
            s2 += w * L;
        }
        parts[b] = {s1, s2};
        mert[b] = m;
    });
    Real s1 = 0, s2 = 0;
    std::int64_t M = 0;
    for (std::size_t b = 0; b < nb; ++b) {
        s1 += Real(parts[b][0]);
        s2 += Real(parts[b][1]);
        M += mert[b];
    }
    // boundary term of partial summation: sum_{n>N} mu(n) f(n) = -M(N) f(N) + int M(t) f'(t) dt
    Real LN = log(Real(N)), fN = LN / (Real(N) * Real(N));
    MobiusSum out;
    out.N = N;
    out.a1 = -(s1 - Real(M) * fN);
    out.a2 = s2 - Real(M) * fN * LN;
    // |M(t)| <= sqrt(t) heuristically; int_N^inf sqrt(t) |f'(t)| dt for f = log^2 t / t^2
    out.tail_bound = Real(4) / 3 * LN * LN / pow(Real(N), Real(1.5));
    return out;
}

MobiusSum mobius_constants_euler(std::uint64_t P) {
    const int order = 2, J = 12;
    const auto& primes = primes_cached(P);
    // log(1/zeta(2+t)) = sum_p log(1 - p^{-2-t})
    const std::size_t block = 4096;
    std::size_t nb = (primes.size() + block - 1) / block;
    std::vector<Taylor> parts(nb, Taylor(order));
    for_each_chunk(nb, [&](std::size_t b) {
        Taylor acc(order);
        for (std::size_t i = b * block; i < std::min(primes.size(), (b + 1) * block); ++i) {
            Real p = primes[i];
            Real L = log(p), y = 1 / (p * p);
            Real ly = log1p(-y);
            // d/dt log(1 - p^{-2-t}) = L y / (1 - y), second derivative -L^2 y / (1 - y)^2
            acc[0] += ly;
            acc[1] += L * y / (1 - y);
            acc[2] += -L * L * y / ((1 - y) * (1 - y)) / 2;
        }
        parts[b] = acc;
    });
    Taylor total(order);
    for (auto& t : parts) total += t;
    auto tails = prime_power_tails(P, 2 * J, order, TailMethod::prime_counting_integral);
    auto exact = prime_power_tails(P, 2 * J, order, TailMethod::prime_zeta);
    Taylor tail(order), tail_exact(order);
    for (int j = 1; j <= J; ++j) {
        tail -= tails[2 * j].scaled(Real(j)) * (Real(1) / j);
        tail_exact -= exact[2 * j].scaled(Real(j)) * (Real(1) / j);
    }
    auto inv = (total + tail).exp_series();
    auto inv_exact = (total + tail_exact).exp_series();
    MobiusSum out;
    out.N = P;
    out.a1 = inv[1];
    out.a2 = 2 * inv[2];
    out.tail_bound = std::max(abs(inv[1] - inv_exact[1]), 2 * abs(inv[2] - inv_exact[2]));
    return out;
}

}  // namespace adsum
