#include "adsum/arith/divisor_table.hpp"
#include "adsum/asym/asym.hpp"
#include "adsum/errors.hpp"

#include <boost/math/special_functions/beta.hpp>

namespace adsum {

Real bareikis_cdf(unsigned k, const Real& A) {
    if (k < 2) fail(ErrorKind::domain, "bareikis_cdf: k must be >= 2");
    if (A < 0 || A > 1) fail(ErrorKind::domain, "bareikis_cdf: A outside [0,1]");
    if (A == 0) return 0;
    if (A == 1) return 1;
    // density u^{-1/k} (1-u)^{1/k-1} / (Gamma(1/k) Gamma(1-1/k)): regularized beta with (1-1/k, 1/k)
    Real inv = Real(1) / Real(k);
    return boost::math::ibeta(1 - inv, inv, A);
}

ApMainTerm ap_main_term(std::uint64_t x, std::uint64_t q, std::uint64_t h, unsigned k, const RationalExponent& A) {
    if (q == 0) fail(ErrorKind::domain, "ap_main_term: q must be >= 1");
    if (k == 0) fail(ErrorKind::domain, "ap_main_term: k must be >= 1");
    ApMainTerm out;
    out.flagged = h % q == 0;
    std::uint64_t top = root_floor(x, A);
    if (top > (std::uint64_t(1) << 32)) fail(ErrorKind::resource, "ap_main_term: x^A exceeds the sieve budget");
    Real sum = 0;
    if (k == 1) {
        sum = 1;  // d_0 is the indicator of n = 1
    } else if (top >= 1) {
        auto t = sieve_dk(k - 1, 1, top, SieveOptions{false});
        for (std::uint64_t n = 1; n <= top; ++n) {
            std::uint64_t g = gcd_u64(n, q);
            if (h % g) continue;
            sum += Real(g) * Real(t[n]) / Real(n);
        }
    }
    out.value = Real(x) / Real(q) * sum;
    return out;
}

}  // namespace adsum
