#include "adsum/arith/partial.hpp"
#include "adsum/errors.hpp"
#include "adsum/kernels/kernels.hpp"
#include "adsum/oracle/oracle.hpp"
#include "adsum/parallel.hpp"

#include <algorithm>
#include <chrono>

namespace adsum {

namespace {

constexpr std::uint64_t brute_limit = 1000000000;
constexpr std::uint64_t dot_chunk = 1 << 20;

// sum_{n in [lo, hi)} a[n+h] b[n]
u128 dot_range(const PartialTable& a, const PartialTable& b, std::uint64_t h, std::uint64_t lo, std::uint64_t hi,
               std::uint64_t max_product) {
    std::size_t nc = chunk_count(lo, hi, dot_chunk);
    std::vector<u128> part(nc, 0);
    for_each_chunk(nc, [&](std::size_t c) {
        auto [x0, x1] = chunk_at(lo, hi, dot_chunk, c);
        part[c] = kernels::dot_u32(a.values.data() + x0 + h, b.values.data() + x0, x1 - x0, max_product);
    });
    u128 s = 0;
    for (auto v : part) s += v;
    return s;
}

void check_budget(std::uint64_t x) {
    if (x > brute_limit) fail(ErrorKind::resource, "brute force beyond 10^9 is not supported");
}

}  // namespace

std::vector<CorrelationResult> brute_correlation_series(std::uint64_t h, unsigned k, unsigned l, const RationalExponent& A,
                                                        const RationalExponent& B, const std::vector<std::uint64_t>& xs) {
    if (xs.empty()) return {};
    if (!std::is_sorted(xs.begin(), xs.end())) fail(ErrorKind::config, "cutoffs must be ascending");
    std::uint64_t xmax = xs.back();
    check_budget(xmax + h);
    auto t0 = std::chrono::steady_clock::now();
    auto ta = sieve_dk_partial(k, A, xmax + h);
    auto tb = sieve_dk_partial(l, B, std::max<std::uint64_t>(xmax, 1));
    std::uint64_t maxp = std::uint64_t(std::max(1u, ta.max_value())) * std::max(1u, tb.max_value());
    std::vector<CorrelationResult> out;
    u128 acc = 0;
    std::uint64_t done = 1;
    for (auto x : xs) {
        if (x + 1 > done) acc += dot_range(ta, tb, h, done, x + 1, maxp);
        done = std::max(done, x + 1);
        CorrelationResult r;
        r.h = h;
        r.k = k;
        r.l = l;
        r.A = A;
        r.B = B;
        r.x = x;
        r.value = acc;
        r.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        out.push_back(r);
    }
    return out;
}

CorrelationResult brute_correlation(std::uint64_t h, unsigned k, unsigned l, const RationalExponent& A,
                                    const RationalExponent& B, std::uint64_t x) {
    return brute_correlation_series(h, k, l, A, B, {x}).front();
}

u128 brute_ap_sum(std::uint64_t x, std::uint64_t q, std::uint64_t h, unsigned k, const RationalExponent& A) {
    if (q == 0) fail(ErrorKind::domain, "brute_ap_sum: q must be >= 1");
    check_budget(x);
    if (x == 0) return 0;
    auto t = sieve_dk_partial(k, A, x);
    std::uint64_t first = h % q == 0 ? q : h % q;
    u128 s = 0;
    for (std::uint64_t n = first; n <= x; n += q) s += t[n];
    return s;
}

int delta_A(std::uint64_t q, const RationalExponent& A, DeltaConvention c) {
    bool integral = inverse_root_is_integer(q, A);
    return c == DeltaConvention::one_if_integer ? (integral ? 1 : 0) : (integral ? 0 : 1);
}

DeltaIdentity delta_identity(std::uint64_t h, unsigned k, unsigned l, const RationalExponent& A, std::uint64_t x,
                             DeltaConvention c) {
    if (l < 1 || k < 1) fail(ErrorKind::domain, "delta_identity: k, l must be >= 1");
    if (A.a == 0) fail(ErrorKind::domain, "delta_identity: A must be positive");
    check_budget(x + h);
    DeltaIdentity out;
    out.direct = brute_correlation(h, k, l, RationalExponent(1, 1), A, x).value;
    auto dk = sieve_dk_partial(k, RationalExponent(1, 1), x + h);
    std::uint64_t qmax = root_floor(x, A);
    std::vector<std::uint32_t> w(qmax + 1, 0);
    if (l == 1) {
        w[1] = 1;
    } else {
        auto t = sieve_dk_partial(l - 1, RationalExponent(1, 1), std::max<std::uint64_t>(qmax, 1));
        std::copy(t.values.begin(), t.values.begin() + qmax + 1, w.begin());
    }
    u128 total = 0;
    for (std::uint64_t q = 1; q <= qmax; ++q) {
        // floor(q^{1/A}): the threshold itself when integral, one below it otherwise
        std::uint64_t thr = root_threshold(q, A);
        std::uint64_t fl = inverse_root_is_integer(q, A) ? thr : thr - 1;
        std::uint64_t y = fl + h - std::uint64_t(delta_A(q, A, c));
        // m = h mod q with y < m <= x + h
        std::uint64_t r = h % q;
        std::uint64_t m = y + 1 + (r + q - (y + 1) % q) % q;
        u128 s = 0;
        for (; m <= x + h; m += q) s += dk[m];
        total += u128(w[q]) * s;
    }
    out.regrouped = total;
    return out;
}

}  // namespace adsum
