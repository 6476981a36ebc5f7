#include "adsum/errors.hpp"
#include "adsum/series/zeta.hpp"

#include <mutex>

namespace adsum {

StieltjesTable stieltjes_constants(int M, int digits) {
    if (M < 0 || M > 30) fail(ErrorKind::domain, "stieltjes_constants: M must be in [0,30]");
    if (digits < 1 || digits > 50) fail(ErrorKind::domain, "stieltjes_constants: digits must be in [1,50]");
    if (digits > 45) fail(ErrorKind::precision, "stieltjes_constants: more than 45 digits requested from a 50-digit evaluation");
    // 2 pi N ~ 2J keeps the asymptotic Bernoulli tail near its minimum, about e^{-2 pi N}
    EulerMaclaurinPlan plan{20, 55};
    std::vector<HighReal> err;
    auto g = stieltjes_em<HighReal>(M, plan, &err);
    StieltjesTable t;
    t.digits = digits;
    for (int m = 0; m <= M; ++m) {
        HighReal scale = std::max(HighReal(1), abs(g[m]));
        if (err[m] > pow(HighReal(10), -digits) * scale)
            fail(ErrorKind::precision, "stieltjes_constants: gamma_" + std::to_string(m) + " not attainable at " +
                                           std::to_string(digits) + " digits");
        t.gammas_high.push_back(g[m]);
        t.gammas.push_back(Real(g[m].str(40)));
    }
    return t;
}

const StieltjesTable& stieltjes_default() {
    static const StieltjesTable t = stieltjes_constants(30, 32);
    return t;
}

Taylor unit_laurent(int order) {
    const auto& g = stieltjes_default().gammas;
    if (order - 1 >= int(g.size())) fail(ErrorKind::precision, "unit_laurent: not enough Stieltjes constants");
    Taylor t(order, Real(1));
    Real fact = 1;
    for (int n = 0; n + 1 <= order; ++n) {
        if (n > 0) fact *= n;
        t[n + 1] = (n % 2 ? -g[n] : g[n]) / fact;
    }
    return t;
}

std::vector<Real> zeta_power_taylor(int j, int R) {
    if (j < 0 || R < 0) fail(ErrorKind::domain, "zeta_power_taylor: negative index");
    auto p = unit_laurent(R).pow_int(j);
    std::vector<Real> a(R + 1);
    for (int r = 0; r <= R; ++r) a[r] = p.derivative(r);
    return a;
}

std::vector<Real> c_coeffs(int j, int N) {
    auto a = zeta_power_taylor(j, N);
    std::vector<Real> c(N + 1);
    for (int n = 0; n <= N; ++n) {
        Real acc = 0, fact = 1;
        for (int r = 0; r <= n; ++r) {
            if (r > 0) fact *= r;
            Real term = a[r] / fact;
            acc += (n - r) % 2 ? -term : term;
        }
        c[n] = acc;
    }
    return c;
}

std::vector<Real> c_coeffs_by_division(int j, int N) {
    auto p = unit_laurent(N).pow_int(j);
    auto q = p / Taylor::variable(N, Real(1));
    return q.coeffs();
}

}  // namespace adsum
