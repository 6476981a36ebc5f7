#include "adsum/arith/partial.hpp"

#include "adsum/errors.hpp"
#include "adsum/parallel.hpp"

#include <algorithm>

namespace adsum {

namespace {

FactoredInteger factor_with(std::uint64_t n, const DivisorTable* ctx) {
    if (!ctx || !ctx->has_spf() || !ctx->contains(n) || ctx->lo != 1) return factorize(n);
    FactoredInteger f;
    f.value = n;
    while (n > 1) {
        std::uint64_t p = ctx->spf[n - 1];
        if (p == 0) p = n;  // prime beyond 32 bits
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        f.factors.push_back({p, e});
    }
    return f;
}

}  // namespace

std::uint64_t dk_partial(std::uint64_t n, unsigned k, const RationalExponent& A, const DivisorTable* ctx) {
    if (n == 0) fail(ErrorKind::range, "dk_partial: n = 0");
    if (k == 0) fail(ErrorKind::domain, "dk_partial: k must be >= 1");
    auto f = factor_with(n, ctx);
    std::uint64_t limit = root_floor(n, A);
    std::uint64_t total = 0;
    for (std::uint64_t q : divisors(f)) {
        if (q > limit) break;
        total += dk_value(factorize(q), k - 1);
    }
    return total;
}

std::uint32_t PartialTable::max_value() const {
    return values.empty() ? 0 : *std::max_element(values.begin(), values.end());
}

PartialTable sieve_dk_partial(unsigned k, const RationalExponent& A, std::uint64_t hi, const SieveOptions& opt) {
    if (k == 0) fail(ErrorKind::domain, "sieve_dk_partial: k must be >= 1");
    if (hi < 1) fail(ErrorKind::range, "sieve_dk_partial: hi must be >= 1");
    if ((hi + 1) * 4 > opt.memory_budget) fail(ErrorKind::resource, "sieve_dk_partial: memory budget exceeded");
    PartialTable t;
    t.k = k;
    t.A = A;
    t.hi = hi;
    if (A.a == A.b && k >= 1) {
        SieveOptions o = opt;
        o.with_spf = false;
        auto full = sieve_dk(k, 1, hi, o);
        t.values.resize(hi + 1);
        t.values[0] = 0;
        std::copy(full.values.begin(), full.values.end(), t.values.begin() + 1);
        return t;
    }
    t.values.assign(hi + 1, 0);
    std::uint64_t qmax = root_floor(hi, A);
    std::vector<std::uint32_t> weight(qmax + 1, 0);  // d_{k-1}(q)
    std::vector<std::uint64_t> start(qmax + 1, 0);   // first admissible n for q
    if (k == 1) {
        weight[1] = 1;
    } else {
        SieveOptions o = opt;
        o.with_spf = false;
        auto w = sieve_dk(k - 1, 1, qmax, o);
        std::copy(w.values.begin(), w.values.end(), weight.begin() + 1);
    }
    for (std::uint64_t q = 1; q <= qmax; ++q) start[q] = root_threshold(q, A);

    std::size_t chunks = chunk_count(1, hi + 1, opt.segment * 4);
    for_each_chunk(chunks, [&](std::size_t c) {
        auto [a, b] = chunk_at(1, hi + 1, opt.segment * 4, c);
        std::uint64_t qtop = std::min<std::uint64_t>(qmax, root_floor(b - 1, A));
        for (std::uint64_t q = 1; q <= qtop; ++q) {
            std::uint32_t wq = weight[q];
            if (wq == 0) continue;
            std::uint64_t n0 = std::max(start[q], a);
            n0 = (n0 + q - 1) / q * q;
            for (std::uint64_t n = n0; n < b; n += q) t.values[n] += wq;
        }
    });
    return t;
}

std::array<Real, 3> sigma_moments(std::uint64_t h) {
    if (h == 0) fail(ErrorKind::range, "sigma_moments: h = 0");
    std::array<Real, 3> r{0, 0, 0};
    for (auto d : divisors(factorize(h))) {
        Real inv = Real(1) / Real(d);
        Real L = log(Real(d));
        r[0] += inv;
        r[1] += inv * L;
        r[2] += inv * L * L;
    }
    return r;
}

}  // namespace adsum
