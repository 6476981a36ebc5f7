#include "adsum/asym/asym.hpp"
#include "adsum/errors.hpp"
#include "adsum/series/zeta.hpp"

#include <algorithm>

namespace adsum {

namespace {

Real factorial(int n) {
    Real f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

Real binom(int n, int r) {
    if (r < 0 || r > n) return 0;
    Real v = 1;
    for (int i = 1; i <= r; ++i) v = v * Real(n - r + i) / Real(i);
    return v;
}

// falling factorial x(x-1)...(x-n+1); empty product for n <= 0
Real falling(int x, int n) {
    Real v = 1;
    for (int i = 0; i < n; ++i) v *= Real(x - i);
    return v;
}

// generalized binomial a(a-1)...(a-b+1)/b!, zero for b < 0 and for 0 <= a < b
Real gbinom(int a, int b) {
    if (b < 0) return 0;
    if (a >= 0 && b > a) return 0;
    return falling(a, b) / factorial(b);
}

Real raw(const Jet2& G, int i, int j) {
    if (i > G.order_s() || j > G.order_w()) fail(ErrorKind::domain, "coefficient needs higher jet orders");
    return G.partial(i, j);
}

Real powA(const Real& A, int e) { return e >= 0 ? pow(A, e) : 1 / pow(A, -e); }

}  // namespace

Real b_coeff(unsigned k, unsigned l, unsigned m, unsigned n, const Jet2& G) {
    if (m >= k || n >= l) fail(ErrorKind::domain, "b_coeff: need m < k and n < l");
    if (G.order_s() < int(k - 1 - m) || G.order_w() < int(l - 1 - n))
        fail(ErrorKind::domain, "b_coeff: insufficient jet orders");
    auto a = zeta_power_taylor(int(l) - 1, int(l));
    auto c = c_coeffs(int(k), int(k));
    Real total = 0;
    for (int i = 0; i <= int(k - 1 - m); ++i)
        for (int j = 0; j <= int(l - 1 - n); ++j) {
            int r = int(l) - 1 - int(n) - j;
            total += a[r] * c[k - 1 - m - i] / factorial(r) * G(i, j);
        }
    return total;
}

Real a_coeff(const RationalExponent& Ar, unsigned k, unsigned l, unsigned e, const Jet2& G) {
    if (l < 2) fail(ErrorKind::domain, "a_coeff: l must be >= 2");
    if (e > k + l - 3) return 0;
    Real A = Real(Ar.a) / Real(Ar.b);
    if (Ar.a == 0) fail(ErrorKind::domain, "a_coeff: A must be positive");
    const int K = int(k), L = int(l), E = int(e);
    auto a = zeta_power_taylor(L - 1, K + L);
    auto c = c_coeffs(K, K);
    Real total = 0;
    for (int j = 0; j <= K - 1; ++j)
        for (int r = E - L + 2; r <= j; ++r) {
            Real inner = 0;
            for (int i = j; i <= K - 1; ++i) inner += binom(i, j) * c[K - 1 - i] / factorial(i) * raw(G, i - j, j - r);
            if (inner == 0) continue;
            for (int v = 0; v <= r - E + L - 2; ++v) {
                // sum_{m=max(0,r)}^{j} C(j,m) (v-l+1)_m / (m-r)!
                Real M = 0;
                for (int m = std::max(0, r); m <= j; ++m) M += binom(j, m) * falling(v - L + 1, m) / factorial(m - r);
                total += powA(-A, r - j - v + L - 1) * a[v] / factorial(v) * M * inner;
            }
        }
    return E % 2 ? -total : total;
}

Real a_coeff_printed(const RationalExponent& Ar, unsigned k, unsigned l, unsigned e, const Jet2& G) {
    if (l < 2) fail(ErrorKind::domain, "a_coeff_printed: l must be >= 2");
    Real A = Real(Ar.a) / Real(Ar.b);
    const int K = int(k), L = int(l), E = int(e);
    auto a = zeta_power_taylor(L - 1, K + L);
    auto c = c_coeffs(K, K);
    Real total = 0;
    for (int j = std::max(0, E - L + 2); j <= K - 1; ++j)
        for (int r = E - L + 2; r <= j; ++r)
            for (int v = 0; v <= r - E + L - 2; ++v) {
                Real pre = powA(-A, r - j - v + L - 1) * a[v] * falling(v - L + 1, r) / factorial(v) * gbinom(L - v - 2, j - r);
                if (pre == 0) continue;
                int wd = j + L - r - 2;
                if (wd < 0) continue;
                Real inner = 0;
                for (int i = j; i <= K - 1; ++i) inner += binom(i, j) * c[K - 1 - i] / factorial(i) * raw(G, i - j, wd);
                total += pre * inner;
            }
    return E % 2 ? -total : total;
}

Real AsymptoticPolynomial::evaluate(const Real& logx) const {
    Real v = 0;
    for (int d = int(coeffs.size()) - 1; d >= 0; --d) v = v * logx + coeffs[d];
    return v;
}

AsymptoticPolynomial assemble_polynomial(const RationalExponent& A, std::uint64_t h, unsigned k, unsigned l, const Jet2& G) {
    if (k < 1 || l < 2) fail(ErrorKind::domain, "polynomial: need k >= 1, l >= 2");
    AsymptoticPolynomial P;
    P.A = A;
    P.h = h;
    P.k = k;
    P.l = l;
    unsigned deg = k + l - 2;
    P.coeffs.assign(deg + 1, Real(0));
    P.provenance.assign(deg + 1, {});
    Real Av = Real(A.a) / Real(A.b);
    for (unsigned m = 0; m < k; ++m)
        for (unsigned n = 0; n < l; ++n) {
            Real t = pow(Av, int(n)) * b_coeff(k, l, m, n, G) / (factorial(int(m)) * factorial(int(n)));
            P.coeffs[m + n] += t;
            P.provenance[m + n].push_back({'b', m, n, t});
        }
    for (unsigned m = 0; m + 3 <= k + l; ++m) {
        Real t = a_coeff(A, k, l, m, G) / factorial(int(m));
        P.coeffs[m] += t;
        P.provenance[m].push_back({'a', m, 0, t});
    }
    return P;
}

AsymptoticPolynomial main_polynomial(const RationalExponent& A, std::uint64_t h, unsigned k, unsigned l,
                                     const PolynomialOptions& opt) {
    auto hf = factorize(h);
    auto orders = default_orders(k, l);
    Jet2 G;
    Real tail;
    std::uint64_t trunc;
    std::string source;
    if (opt.use_dirichlet) {
        auto d = dirichlet_partials(hf, k, l, opt.Q, orders);
        G = d.partials;
        tail = d.tail_estimate;
        trunc = opt.Q;
        source = "dirichlet";
    } else {
        auto e = euler_product_jet(hf, k, l, orders, opt.P);
        G = e.value;
        tail = e.tail_bound;
        trunc = opt.P;
        source = "euler";
    }
    auto P = assemble_polynomial(A, h, k, l, G);
    P.source = source;
    P.truncation = trunc;
    P.tail_bound = tail;
    Rational Aq(A.a, A.b);
    P.out_of_proven_range = k >= 2 && !(Aq < theta_exponent(k, Rational(0)));
    return P;
}

Real conjecture_leading(std::uint64_t h, unsigned k, unsigned l, std::uint64_t P) {
    if (k < 2 || l < 2) fail(ErrorKind::domain, "conjecture_leading: need k, l >= 2");
    Real C = singular_C(k, l, P).value;
    Real f = singular_f(factorize(h), k, l);
    return C * f / (factorial(int(k) - 1) * factorial(int(l) - 1));
}

}  // namespace adsum
