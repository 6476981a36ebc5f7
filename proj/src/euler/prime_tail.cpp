#include "adsum/arith/divisor_table.hpp"
#include "adsum/errors.hpp"
#include "adsum/euler/euler.hpp"
#include "adsum/parallel.hpp"
#include "adsum/series/zeta.hpp"

#include <boost/math/special_functions/expint.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include <map>
#include <memory>
#include <mutex>

namespace adsum {

const std::vector<std::uint32_t>& primes_cached(std::uint64_t P) {
    static std::mutex mu;
    static std::map<std::uint64_t, std::unique_ptr<std::vector<std::uint32_t>>> cache;
    std::lock_guard lk(mu);
    auto& slot = cache[P];
    if (!slot) slot = std::make_unique<std::vector<std::uint32_t>>(primes_up_to(std::uint32_t(P)));
    return *slot;
}

std::vector<Taylor> prime_power_tails(std::uint64_t P, int maxN, int order, TailMethod method) {
    if (P < 2 || P > 0xffffffffu) fail(ErrorKind::range, "prime cutoff out of range");
    std::vector<Taylor> out(maxN + 1, Taylor(order));
    if (method == TailMethod::prime_counting_integral) {
        // sum_{p>P} p^{-N} (-log p)^n / n!  ~  (-1)^n / n! int_{log P}^inf y^{n-1} e^{-(N-1) y} dy
        Real lp = log(Real(P));
        for (int N = 2; N <= maxN; ++N) {
            Real m = Real(N - 1);
            Real fact = 1;
            for (int n = 0; n <= order; ++n) {
                if (n > 0) fact *= n;
                Real integral = n == 0 ? boost::math::expint(1, m * lp) : boost::math::tgamma(Real(n), m * lp) / pow(m, n);
                out[N][n] = (n % 2 ? -integral : integral) / fact;
            }
        }
        return out;
    }
    const auto& primes = primes_cached(P);
    // partial sums over p <= P in fixed blocks, merged in block order
    const std::size_t block = 4096;
    std::size_t nb = (primes.size() + block - 1) / block;
    std::vector<std::vector<Taylor>> parts(nb, std::vector<Taylor>(maxN + 1, Taylor(order)));
    for_each_chunk(nb, [&](std::size_t b) {
        auto& acc = parts[b];
        for (std::size_t i = b * block; i < std::min(primes.size(), (b + 1) * block); ++i) {
            Real p = primes[i];
            Real L = log(p);
            Real pn = 1 / (p * p);
            for (int N = 2; N <= maxN; ++N) {
                Real term = pn;
                for (int n = 0; n <= order; ++n) {
                    acc[N][n] += term;
                    term = -term * L / Real(n + 1);
                }
                pn /= p;
            }
        }
    });
    for (int N = 2; N <= maxN; ++N) {
        out[N] = prime_zeta_taylor(N, order);
        for (std::size_t b = 0; b < nb; ++b) out[N] -= parts[b][N];
    }
    return out;
}

}  // namespace adsum
