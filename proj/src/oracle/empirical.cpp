#include "adsum/arith/partial.hpp"
#include "adsum/errors.hpp"
#include "adsum/oracle/oracle.hpp"
#include "adsum/parallel.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>

namespace adsum {

namespace mp = boost::multiprecision;

EmpiricalDistribution empirical_distribution(unsigned k, const RationalExponent& A, std::uint64_t x, unsigned bins) {
    if (k < 1) fail(ErrorKind::domain, "empirical_distribution: k must be >= 1");
    if (x < 1) fail(ErrorKind::range, "empirical_distribution: x must be >= 1");
    if (bins < 1) fail(ErrorKind::config, "empirical_distribution: need at least one bin");
    if (x > 1000000000) fail(ErrorKind::resource, "brute force beyond 10^9 is not supported");
    auto part = sieve_dk_partial(k, A, x);
    auto full = sieve_dk_partial(k, RationalExponent(1, 1), x);
    std::size_t maxden = full.max_value();

    // numerators grouped by denominator, so the mean is an exact fraction
    const std::uint64_t chunk = 1 << 20;
    std::size_t nc = chunk_count(1, x + 1, chunk);
    struct Part {
        std::vector<std::uint64_t> num;
        std::vector<std::uint64_t> hist;
        u128 ps = 0, fs = 0;
    };
    std::vector<Part> parts(nc);
    for_each_chunk(nc, [&](std::size_t c) {
        auto [lo, hi] = chunk_at(1, x + 1, chunk, c);
        Part& p = parts[c];
        p.num.assign(maxden + 1, 0);
        p.hist.assign(bins, 0);
        for (std::uint64_t n = lo; n < hi; ++n) {
            std::uint32_t a = part[n], d = full[n];
            p.num[d] += a;
            p.hist[std::min<std::uint64_t>(bins - 1, std::uint64_t(a) * bins / d)]++;
            p.ps += a;
            p.fs += d;
        }
    });
    EmpiricalDistribution out;
    out.k = k;
    out.A = A;
    out.x = x;
    out.histogram.assign(bins, 0);
    std::vector<std::uint64_t> num(maxden + 1, 0);
    for (auto& p : parts) {
        for (std::size_t d = 0; d <= maxden; ++d) num[d] += p.num[d];
        for (unsigned b = 0; b < bins; ++b) out.histogram[b] += p.hist[b];
        out.partial_sum += p.ps;
        out.full_sum += p.fs;
    }
    mp::cpp_rational mean = 0;
    for (std::size_t d = 1; d <= maxden; ++d)
        if (num[d]) mean += mp::cpp_rational(mp::cpp_int(num[d]), mp::cpp_int(d));
    mean /= mp::cpp_int(x);
    out.mean_exact = mean.str();
    out.mean = Real(mp::numerator(mean).str()) / Real(mp::denominator(mean).str());

    mp::cpp_int ak = mp::pow(mp::cpp_int(A.a), k - 1), bk = mp::pow(mp::cpp_int(A.b), k - 1);
    mp::cpp_int diff = mp::cpp_int(to_string(out.partial_sum)) * bk - mp::cpp_int(to_string(out.full_sum)) * ak;
    if (diff < 0) diff = -diff;
    out.diffb_residual = Real(diff.str()) / (Real(bk.str()) * Real(x));
    return out;
}

}  // namespace adsum
