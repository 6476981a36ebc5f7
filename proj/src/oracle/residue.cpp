#include "adsum/asym/asym.hpp"
#include "adsum/errors.hpp"
#include "adsum/euler/varphi_context.hpp"
#include "adsum/oracle/oracle.hpp"
#include "adsum/series/zeta.hpp"

#include <algorithm>

namespace adsum {

namespace {

// Series in sigma = s - 1 whose coefficients are polynomials in L = log x.
struct LogSeries {
    int S, D;
    std::vector<Real> c;
    LogSeries(int S_, int D_) : S(S_), D(D_), c((S_ + 1) * (D_ + 1), Real(0)) {}
    Real& at(int i, int d) { return c[i * (D + 1) + d]; }
    Real at(int i, int d) const { return c[i * (D + 1) + d]; }
};

LogSeries mul(const LogSeries& a, const LogSeries& b) {
    LogSeries r(a.S, a.D);
    for (int i = 0; i <= a.S; ++i)
        for (int d = 0; d <= a.D; ++d) {
            Real x = a.at(i, d);
            if (x == 0) continue;
            for (int j = 0; i + j <= a.S && j <= b.S; ++j)
                for (int e = 0; d + e <= a.D && e <= b.D; ++e) r.at(i + j, d + e) += x * b.at(j, e);
        }
    return r;
}

Real fact(int n) {
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

// K(sigma) e^{sigma L} times the summed Dirichlet part; returns [sigma^{k-1}] as a polynomial in L
std::vector<Real> extract(const LogSeries& part, unsigned k) {
    int S = part.S, D = part.D;
    auto c = c_coeffs(int(k), S);
    LogSeries K(S, D), E(S, D);
    for (int i = 0; i <= S; ++i) K.at(i, 0) = c[i];
    for (int i = 0; i <= std::min(S, D); ++i) E.at(i, i) = 1 / fact(i);
    auto t = mul(mul(K, E), part);
    std::vector<Real> out(D + 1);
    for (int d = 0; d <= D; ++d) out[d] = t.at(int(k) - 1, d);
    return out;
}

}  // namespace

ResidueResult residue_secondary(std::uint64_t h, unsigned k, unsigned l, const RationalExponent& A, std::uint64_t Q) {
    if (k < 1 || l < 2) fail(ErrorKind::domain, "residue oracle: need k >= 1 and l >= 2");
    if (A.a == 0) fail(ErrorKind::domain, "residue oracle: A must be positive");
    if (Q < 1) fail(ErrorKind::range, "residue oracle: Q must be >= 1");
    const int S = int(k) - 1, D = int(k + l) - 2;
    const Real Av = Real(A.a) / Real(A.b);
    auto hf = factorize(h);

    // V_j(sigma) = sum_{d<=Q} varphi(d, sigma) (-log d)^j / j!
    std::vector<Taylor> V(l, Taylor(S));
    {
        VarphiContext ctx(hf, k, l, Q, S);
        Taylor v;
        Real ld;
        for (std::uint64_t d = 1; d <= Q; ++d) {
            if (!ctx.value(d, v, ld)) continue;
            Real w = 1;
            for (unsigned j = 0; j < l; ++j) {
                for (int i = 0; i <= S; ++i) V[j][i] += v[i] * w;
                w = -w * ld / Real(j + 1);
            }
        }
    }
    auto a = zeta_power_taylor(int(l) - 1, int(l) - 1);

    // sum_d varphi(d) (A L - log d)^t / t! = sum_u (A L)^u / u! V_{t-u}
    auto lambda_power = [&](int t) {
        LogSeries r(S, D);
        for (int u = 0; u <= t; ++u)
            for (int i = 0; i <= S; ++i) r.at(i, u) += pow(Av, u) / fact(u) * V[t - u][i];
        return r;
    };

    // Z route: residue of zeta^{l-1}(1+w) e^{w lambda} / w
    LogSeries Z(S, D);
    for (int t = 0; t <= int(l) - 1; ++t) {
        auto lp = lambda_power(t);
        Real ar = a[l - 1 - t] / fact(int(l) - 1 - t);
        for (std::size_t n = 0; n < Z.c.size(); ++n) Z.c[n] += ar * lp.c[n];
    }
    // W route: residue of zeta^{l-1}(1+w) e^{w lambda} / (w + s/A)
    LogSeries W(S, D);
    for (int t = 0; t <= int(l) - 2; ++t) {
        auto lp = lambda_power(t);
        for (int n = 0; t + n <= int(l) - 2; ++n) {
            int r = int(l) - 2 - t - n;
            Real pre = a[r] / fact(r) * (n % 2 ? -1 : 1) * pow(Av, n + 1);
            // (1 + sigma)^{-n-1}
            LogSeries sp(S, D);
            for (int i = 0; i <= S; ++i) sp.at(i, 0) = (i % 2 ? -1 : 1) * binom(n + i, i);
            auto term = mul(sp, lp);
            for (std::size_t m = 0; m < W.c.size(); ++m) W.c[m] += pre * term.c[m];
        }
    }

    ResidueResult out;
    out.h = h;
    out.k = k;
    out.l = l;
    out.A = A;
    out.Q = Q;
    out.primary = extract(Z, k);
    out.secondary = extract(W, k);
    for (auto& v : out.secondary) v = -v;

    // Finite q-sums with the two boundary weights: sum_{q<=Q} phi(q, s) w_q^s, residue as above.
    Real with_power = 0, with_exact = 0;
    auto c = c_coeffs(int(k), S);
    for (std::uint64_t q = 1; q <= Q; ++q) {
        auto qf = factorize(q);
        Taylor phi(S, Real(1));
        for (auto& pp : qf.factors) phi = phi * phi_local(hf, k, l, pp.p, pp.e, S);
        Real lp = log(Real(q)) / Av;
        Real root = inverse_root_is_integer(q, A) ? round(exp(lp)) : exp(lp);
        Real we = root + Real(h) - Real(delta_A(q, A, DeltaConvention::one_if_integer));
        Real le = log(we);
        // [sigma^{k-1}] K(sigma) phi(sigma) w^{1+sigma}
        auto pe = Taylor::exp_linear(S, lp, lp) * phi;
        auto ee = Taylor::exp_linear(S, le, le) * phi;
        for (int i = 0; i <= S; ++i) {
            with_power += c[S - i] * pe[i];
            with_exact += c[S - i] * ee[i];
        }
    }
    out.exact_weight_gap = with_power == 0 ? Real(0) : abs(with_exact - with_power) / abs(with_power);
    return out;
}

ResidueComparison compare_residue(std::uint64_t h, unsigned k, unsigned l, const RationalExponent& A, std::uint64_t Q) {
    ResidueComparison out;
    out.oracle = residue_secondary(h, k, l, A, Q);
    auto G = dirichlet_partials(factorize(h), k, l, Q, default_orders(k, l)).partials;
    auto P = assemble_polynomial(A, h, k, l, G);
    std::size_t D = P.coeffs.size();
    out.primary_assembled.assign(D, Real(0));
    out.secondary_assembled.assign(D, Real(0));
    for (std::size_t d = 0; d < D; ++d)
        for (auto& t : P.provenance[d]) (t.kind == 'b' ? out.primary_assembled : out.secondary_assembled)[d] += t.contribution;
    auto rel = [&](const std::vector<Real>& x, const std::vector<Real>& y) {
        Real gap = 0, scale = 0;
        for (std::size_t d = 0; d < D; ++d) {
            Real xv = d < x.size() ? x[d] : Real(0);
            gap = std::max(gap, abs(xv - y[d]));
            scale = std::max(scale, abs(y[d]));
        }
        return scale == 0 ? gap : gap / scale;
    };
    out.primary_rel = rel(out.oracle.primary, out.primary_assembled);
    out.secondary_rel = rel(out.oracle.secondary, out.secondary_assembled);
    return out;
}

}  // namespace adsum
