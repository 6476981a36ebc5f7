#include "adsum/arith/factor.hpp"
#include "adsum/errors.hpp"
#include "adsum/series/zeta.hpp"

#include <algorithm>
#include <cmath>

namespace adsum {

std::array<Real, 3> zeta_at_two() {
    auto z = zeta_taylor_at<Real>(Real(2), 2, {30, 25});
    return {z[0], z[1], 2 * z[2]};
}

MobiusConstants mobius_constants_closed() {
    auto [z, z1, z2] = zeta_at_two();
    MobiusConstants m;
    m.a1 = -z1 / (z * z);
    m.a2 = 2 * z1 * z1 / (z * z * z) - z2 / (z * z);
    return m;
}

Taylor prime_zeta_taylor(int sigma0, int order) {
    if (sigma0 < 2) fail(ErrorKind::domain, "prime_zeta_taylor: sigma0 must be >= 2");
    Taylor total(order);
    // sum_m mu(m)/m log zeta(m (sigma0 + t)); the n-th coefficient of the m-th term is
    // about (m log 2)^n / n! 2^{-m sigma0}, dropped once below 1e-40 for every n <= order
    auto negligible = [&](int m) {
        double lg = -m * sigma0 * std::log(2.0);
        double worst = lg, fact = 0;
        for (int n = 1; n <= order; ++n) {
            fact += std::log(double(n));
            worst = std::max(worst, lg + n * std::log(m * std::log(2.0)) - fact);
        }
        return worst < -92.0;
    };
    for (int m = 1; !negligible(m); ++m) {
        auto f = factorize(std::uint64_t(m));
        bool squarefree = true;
        for (auto& pe : f.factors) squarefree &= pe.e == 1;
        if (!squarefree) continue;
        int mu = f.factors.size() % 2 ? -1 : 1;
        auto lz = zeta_taylor_at<Real>(Real(m * sigma0), order, {20, 20}).log_series().scaled(Real(m));
        total += lz * (Real(mu) / Real(m));
    }
    return total;
}

}  // namespace adsum
