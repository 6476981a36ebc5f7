#include "adsum/errors.hpp"
#include "adsum/euler/euler.hpp"
#include "adsum/parallel.hpp"

#include <boost/math/constants/constants.hpp>

#include <algorithm>
#include <cmath>

namespace adsum {

namespace {

// Dense polynomial in (u, v, x) truncated at total degree D.
struct Poly3 {
    int D;
    std::vector<Real> c;
    explicit Poly3(int d) : D(d), c((d + 1) * (d + 1) * (d + 1), Real(0)) {}
    Real& at(int a, int b, int e) { return c[(a * (D + 1) + b) * (D + 1) + e]; }
    const Real& at(int a, int b, int e) const { return c[(a * (D + 1) + b) * (D + 1) + e]; }

    friend Poly3 operator*(const Poly3& p, const Poly3& q) {
        Poly3 r(p.D);
        int D = p.D;
        for (int a = 0; a <= D; ++a)
            for (int b = 0; a + b <= D; ++b)
                for (int e = 0; a + b + e <= D; ++e) {
                    const Real& x = p.at(a, b, e);
                    if (x == 0) continue;
                    for (int a2 = 0; a + a2 <= D; ++a2)
                        for (int b2 = 0; a + a2 + b + b2 <= D; ++b2)
                            for (int e2 = 0; a + a2 + b + b2 + e + e2 <= D; ++e2)
                                r.at(a + a2, b + b2, e + e2) += x * q.at(a2, b2, e2);
                }
        return r;
    }
};

// log F_p for p not dividing h, F = 1 + B(u) (D(v,x) - 1), as a polynomial in u = p^{-w-1}, v = p^{-s}, x = 1/p
Poly3 log_factor_expansion(unsigned k, unsigned l, int D) {
    Poly3 B(D), Dm1(D);
    // B = 1 - (1-u)^{l-1}
    Real binom = 1;
    for (unsigned a = 1; a <= l - 1 && int(a) <= D; ++a) {
        binom = binom * Real(l - a) / Real(a);
        B.at(a, 0, 0) = (a % 2 ? binom : -binom);
    }
    // (1-v)^k / (1-x) - 1
    Real bk = 1;
    for (unsigned b = 0; b <= k && int(b) <= D; ++b) {
        if (b > 0) bk = bk * Real(k - b + 1) / Real(b);
        for (int e = 0; int(b) + e <= D; ++e) Dm1.at(0, b, e) += (b % 2 ? -bk : bk);
    }
    Dm1.at(0, 0, 0) -= 1;
    Poly3 E = B * Dm1;
    Poly3 total(D), power = E;
    for (int n = 1; 2 * n <= D; ++n) {
        Real s = Real(n % 2 ? 1 : -1) / Real(n);
        for (std::size_t i = 0; i < total.c.size(); ++i) total.c[i] += s * power.c[i];
        power = power * E;
    }
    return total;
}

constexpr int tail_degree = 7;

// sum_{p>P} log F_p as a jet, from the monomial expansion and the prime power tails
Jet2 tail_jet(unsigned k, unsigned l, JetOrders o, const std::vector<Taylor>& tails, const Poly3& kappa) {
    Jet2 r(o.s, o.w);
    for (int a = 0; a <= kappa.D; ++a)
        for (int b = 0; a + b <= kappa.D; ++b)
            for (int e = 0; a + b + e <= kappa.D; ++e) {
                const Real& kv = kappa.at(a, b, e);
                if (kv == 0) continue;
                int N = a + b + e;
                if (N < 2 || N >= int(tails.size())) continue;
                for (int i = 0; i <= o.s; ++i)
                    for (int j = 0; j <= o.w; ++j) {
                        // (a w + b (s-1))^{i+j} contributes C(i+j, i) b^i a^j
                        Real c = 1;
                        for (int t = 1; t <= i; ++t) c = c * Real(i + j - t + 1) / Real(t);
                        Real coef = c * pow(Real(b), i) * pow(Real(a), j);
                        if (coef == 0) continue;
                        r(i, j) += kv * tails[N][i + j] * coef;
                    }
            }
    (void)k;
    (void)l;
    return r;
}

Real tail_bound_estimate(unsigned k, unsigned l, JetOrders o, std::uint64_t P, TailMethod method) {
    Real lp = log(Real(P));
    Real logs = pow(lp, o.s + o.w);
    if (method == TailMethod::prime_counting_integral) {
        // |pi(t) - li(t)| <= sqrt(t) log t / (8 pi) integrated against the p^{-2} term
        Real kap = Real((k + 1) * l);
        return kap * logs * lp * pow(Real(P), Real(-1.5)) / (6 * boost::math::constants::pi<Real>());
    }
    // first omitted total degree
    auto kappa = log_factor_expansion(k, l, tail_degree + 1);
    Real worst = 0;
    for (int a = 0; a <= tail_degree + 1; ++a)
        for (int b = 0; a + b <= tail_degree + 1; ++b) {
            int e = tail_degree + 1 - a - b;
            worst = std::max(worst, abs(kappa.at(a, b, e)) * pow(Real(std::max(a, b) + 1), o.s + o.w));
        }
    return worst * Real(tail_degree + 2) * logs * pow(Real(P), -tail_degree) + Real(1e-32);
}

struct Kahan {
    std::vector<Real> sum, comp;
    explicit Kahan(std::size_t n) : sum(n, Real(0)), comp(n, Real(0)) {}
    void add(std::size_t i, const Real& x) {
        Real y = x - comp[i];
        Real t = sum[i] + y;
        comp[i] = (t - sum[i]) - y;
        sum[i] = t;
    }
};

}  // namespace

ProductValue singular_C(unsigned k, unsigned l, std::uint64_t P, const Real& tol, TailMethod method) {
    if (k < 1 || l < 1) fail(ErrorKind::domain, "singular_C: k, l must be >= 1");
    ProductValue out{Real(1), Real(0), Real(0), P};
    if (k == 1 || l == 1) return out;
    const auto& primes = primes_cached(P);
    const std::size_t block = 8192;
    std::size_t nb = (primes.size() + block - 1) / block;
    std::vector<Real> parts(nb, Real(0));
    for_each_chunk(nb, [&](std::size_t b) {
        Kahan acc(1);
        for (std::size_t i = b * block; i < std::min(primes.size(), (b + 1) * block); ++i) {
            Real x = Real(1) / Real(primes[i]);
            Real bterm = 1 - pow(1 - x, int(l - 1));
            acc.add(0, log1p(bterm * (pow(1 - x, int(k - 1)) - 1)));
        }
        parts[b] = acc.sum[0];
    });
    Real logsum = 0;
    for (auto& v : parts) logsum += v;
    auto tails = prime_power_tails(P, tail_degree, 0, method);
    auto kappa = log_factor_expansion(k, l, tail_degree);
    Real tail = tail_jet(k, l, {0, 0}, tails, kappa)(0, 0);
    out.tail = tail;
    out.value = exp(logsum + tail);
    out.tail_bound = out.value * tail_bound_estimate(k, l, {0, 0}, P, method);
    if (out.tail_bound > tol)
        fail(ErrorKind::precision, "singular_C: tail bound " + to_string(out.tail_bound, 6) + " exceeds tolerance");
    return out;
}

Real singular_f(const FactoredInteger& h, unsigned k, unsigned l) {
    if (k < 1 || l < 1) fail(ErrorKind::domain, "singular_f: k, l must be >= 1");
    Real f = 1;
    for (auto [p, g] : h.factors) {
        Real x = Real(1) / Real(p);
        Real head = 0, partial = 0, xb = 1;
        for (unsigned a = 0; a <= g; ++a) {
            if (a > 0) {
                partial += Real(dk_prime_power(k, a - 1)) * xb;
                xb *= x;
            }
            head += Real(dk_prime_power(l - 1, a)) * (pow(1 - x, -int(k)) - partial);
        }
        Real geo = pow(1 - x, -int(l - 1)), xa = 1;
        for (unsigned a = 0; a <= g; ++a) {
            geo -= Real(dk_prime_power(l - 1, a)) * xa;
            xa *= x;
        }
        Real num = (1 - x) * head + Real(dk_prime_power(k, g)) * geo;
        Real den = pow(1 - x, 1 - int(k)) + pow(1 - x, 1 - int(l)) - 1;
        f *= num / den;
    }
    return f;
}

EulerJet euler_product_jet(const FactoredInteger& h, unsigned k, unsigned l, JetOrders o, std::uint64_t P, FForm form,
                           TailMethod method) {
    if (k < 1 || l < 2) fail(ErrorKind::domain, "euler_product_jet: need k >= 1 and l >= 2");
    if (!h.factors.empty() && h.factors.back().p > P)
        fail(ErrorKind::range, "euler_product_jet: prime cutoff below a prime factor of h");
    const auto& primes = primes_cached(P);
    const int S = o.s, W = o.w;
    const std::size_t ncoef = std::size_t(S + 1) * (W + 1);
    const std::size_t block = 4096;
    std::size_t nb = (primes.size() + block - 1) / block;
    std::vector<Jet2> parts(nb, Jet2(S, W));
    for_each_chunk(nb, [&](std::size_t b) {
        Kahan acc(ncoef);
        for (std::size_t i = b * block; i < std::min(primes.size(), (b + 1) * block); ++i) {
            std::uint64_t p = primes[i];
            Jet2 lf;
            unsigned g = h.exponent_of(p);
            if (g > 0) {
                lf = local_factor_jet(p, g, k, l, o, form).log();
            } else {
                // 1 + B(w) (D(s) - 1): outer product of univariate series
                Real L = log(Real(p)), x = Real(1) / Real(p);
                auto u = Taylor::exp_linear(W, -L, -L);
                auto v = Taylor::exp_linear(S, -L, -L);
                auto B = Taylor(W, Real(1)) - (Taylor(W, Real(1)) - u).pow_int(l - 1);
                auto Dm1 = (Taylor(S, Real(1)) - v).pow_int(k) * (Real(1) / (1 - x)) + Real(-1);
                auto F = Jet2::outer(Dm1, B, S, W);
                F += Real(1);
                lf = F.log();
            }
            for (std::size_t n = 0; n < ncoef; ++n) acc.add(n, lf.data()[n]);
        }
        Jet2 r(S, W);
        for (int i = 0; i <= S; ++i)
            for (int j = 0; j <= W; ++j) r(i, j) = acc.sum[i * (W + 1) + j];
        parts[b] = r;
    });
    Jet2 logsum(S, W);
    for (auto& pj : parts) logsum += pj;
    auto tails = prime_power_tails(P, tail_degree, S + W, method);
    auto kappa = log_factor_expansion(k, l, tail_degree);
    logsum += tail_jet(k, l, o, tails, kappa);
    EulerJet out{logsum.exp(), Real(0), P};
    out.tail_bound = abs(out.value(0, 0)) * tail_bound_estimate(k, l, o, P, method) * Real(4);
    return out;
}

}  // namespace adsum
