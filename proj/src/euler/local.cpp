#include "adsum/errors.hpp"
#include "adsum/euler/euler.hpp"

#include <algorithm>

namespace adsum {

namespace {

Real binom_real(unsigned n, unsigned r) {
    if (r > n) return 0;
    Real v = 1;
    for (unsigned i = 1; i <= r; ++i) v = v * Real(n - r + i) / Real(i);
    return v;
}

// p^{-s} as a series in s-1
Taylor p_minus_s(std::uint64_t p, int order) {
    Real L = log(Real(p));
    return Taylor::exp_linear(order, -L, -L);
}

}  // namespace

JetOrders default_orders(unsigned k, unsigned l) { return {int(k), int(k + l - 2)}; }

Taylor phi_local(unsigned gamma, unsigned k, unsigned l, std::uint64_t p, unsigned alpha, int order_s) {
    if (l < 1 || k < 1) fail(ErrorKind::domain, "phi_local: k, l must be >= 1");
    Taylor one(order_s, Real(1));
    if (alpha == 0) return one;
    Real dl = Real(dk_prime_power(l - 1, alpha));
    auto v = p_minus_s(p, order_s);
    auto omv_k = (one - v).pow_int(k);
    Real x = Real(1) / Real(p);
    if (gamma == 0) {
        // d_{l-1}(p^a) (1-p^{-s})^k / phi_Euler(p^a)
        Real phiE = pow(Real(p), int(alpha)) * (1 - x);
        return omv_k * (dl / phiE);
    }
    if (alpha <= gamma) {
        // d_{l-1}(p^a) (1 - (1-p^{-s})^k sum_{b<a} d_k(p^b) p^{-bs})
        Taylor partial(order_s);
        Taylor vb = one;
        for (unsigned b = 0; b < alpha; ++b) {
            partial += vb * Real(dk_prime_power(k, b));
            vb = vb * v;
        }
        return (one - omv_k * partial) * dl;
    }
    // d_{l-1}(p^a) (1-p^{-s})^k d_k(p^g) p^{-gs} / phi_Euler(p^{a-g})
    Real phiE = pow(Real(p), int(alpha - gamma)) * (1 - x);
    return omv_k * v.pow_int(gamma) * (dl * Real(dk_prime_power(k, gamma)) / phiE);
}

Taylor phi_local(const FactoredInteger& h, unsigned k, unsigned l, std::uint64_t p, unsigned alpha, int order_s) {
    return phi_local(h.exponent_of(p), k, l, p, alpha, order_s);
}

Taylor varphi_local(unsigned gamma, unsigned k, unsigned l, std::uint64_t p, unsigned alpha, int order_s) {
    // coefficient of X^alpha in (1 - X/p)^{l-1} sum_a phi(p^a) X^a
    Taylor r(order_s);
    Real mp = Real(-1) / Real(p);
    for (unsigned t = 0; t <= std::min(alpha, l - 1); ++t)
        r += phi_local(gamma, k, l, p, alpha - t, order_s) * (binom_real(l - 1, t) * pow(mp, int(t)));
    return r;
}

Jet2 local_factor_jet(std::uint64_t p, unsigned gamma, unsigned k, unsigned l, JetOrders o, FForm form) {
    if (l < 1 || k < 1) fail(ErrorKind::domain, "local factor: k, l must be >= 1");
    const int S = o.s, W = o.w;
    Real L = log(Real(p));
    Real x = Real(1) / Real(p);
    Jet2 one(S, W, Real(1));
    auto u = Jet2::exp_linear(S, W, -L, Real(0), -L);  // p^{-w-1}
    auto v = Jet2::exp_linear(S, W, -L, -L, Real(0));  // p^{-s}
    auto omu_l = (one - u).pow_int(l - 1);
    auto omv_k = (one - v).pow_int(k);
    if (gamma == 0) {
        // (1-u)^{l-1} + (1-v)^k (1 - (1-u)^{l-1}) / (1-x)
        return omu_l + omv_k * (one - omu_l) * (Real(1) / (1 - x));
    }
    auto X = u * Real(p);  // p^{-w}
    // sum_{a<=g} d_{l-1}(p^a) X^a sum_{b>=a} d_k(p^b) v^b, with the b-sum in closed form
    Jet2 head(S, W);
    auto inv_omv_k = omv_k.inverse();
    Jet2 Xa = one, vb_partial(S, W), vb = one;
    for (unsigned a = 0; a <= gamma; ++a) {
        if (a > 0) {
            vb_partial += vb * Real(dk_prime_power(k, a - 1));
            vb = vb * v;
        }
        head += Xa * (inv_omv_k - vb_partial) * Real(dk_prime_power(l - 1, a));
        Xa = Xa * X;
    }
    // sum_{a>g} d_{l-1}(p^a) u^a
    Jet2 geo = omu_l.inverse();
    Jet2 ua = one;
    for (unsigned a = 0; a <= gamma; ++a) {
        geo -= ua * Real(dk_prime_power(l - 1, a));
        ua = ua * u;
    }
    Real dkg = Real(dk_prime_power(k, gamma));
    if (form == FForm::summand) {
        // (1-u)^{l-1} sum_a phi(s,p^a) X^a
        auto tail = v.pow_int(gamma) * geo * (dkg * pow(Real(p), int(gamma)) / (1 - x));
        return omu_l * omv_k * (head + tail);
    }
    // C_p * f_p with the display numerator: (1-u)^{l-1} (1-v)^k/(1-x) * num
    auto num = head * (1 - x) + geo * dkg;
    return omu_l * omv_k * num * (Real(1) / (1 - x));
}

LocalFactor local_factor_Cf(std::uint64_t p, const FactoredInteger& h, unsigned k, unsigned l, JetOrders o, FForm form) {
    LocalFactor f;
    f.p = p;
    f.gamma = h.exponent_of(p);
    f.k = k;
    f.l = l;
    f.value = local_factor_jet(p, f.gamma, k, l, o, form);
    return f;
}

Real c_factor_bracketed(std::uint64_t p, unsigned k, unsigned l, const Real& s, const Real& w) {
    Real u = pow(Real(p), -w - 1), v = pow(Real(p), -s), x = Real(1) / Real(p);
    Real a = pow(1 - u, int(l - 1));
    return a + pow(1 - v, int(k)) * (1 - a) / (1 - x);
}

Real c_factor_expanded(std::uint64_t p, unsigned k, unsigned l, const Real& s, const Real& w) {
    Real u = pow(Real(p), -w - 1), v = pow(Real(p), -s), x = Real(1) / Real(p);
    Real a = pow(1 - u, int(l - 1));
    Real b = pow(1 - v, int(k));
    return a + b / (1 - x) - b * a / (1 - x);
}

}  // namespace adsum
