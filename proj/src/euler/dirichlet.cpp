#include "adsum/errors.hpp"
#include "adsum/euler/euler.hpp"
#include "adsum/euler/varphi_context.hpp"
#include "adsum/parallel.hpp"

#include <algorithm>

namespace adsum {

VarphiContext::VarphiContext(const FactoredInteger& h, unsigned k, unsigned l, std::uint64_t Q, int order_s)
    : Q_(Q), S_(order_s) {
    if (l < 2 || k < 1) fail(ErrorKind::domain, "varphi: need k >= 1, l >= 2");
    if (Q < 1 || Q > 400000000ull) fail(ErrorKind::resource, "varphi: Q outside supported range");
    SieveOptions opt;
    spf_ = sieve_dk(1, 1, Q, opt);
    pidx_.assign(Q + 1, 0);
    auto primes = primes_up_to(std::uint32_t(Q));
    logp_.resize(primes.size());
    local_.resize(primes.size());
    for (std::size_t i = 0; i < primes.size(); ++i) pidx_[primes[i]] = std::uint32_t(i);
    for_each_chunk((primes.size() + 1023) / 1024, [&](std::size_t c) {
        for (std::size_t i = c * 1024; i < std::min(primes.size(), (c + 1) * 1024); ++i) {
            std::uint64_t p = primes[i];
            logp_[i] = log(Real(p));
            unsigned g = h.exponent_of(p);
            auto& v = local_[i];
            v.push_back(Taylor(order_s, Real(1)));
            std::uint64_t pa = p;
            for (unsigned a = 1;; ++a) {
                if (g == 0 && a >= l) break;  // (1-u)^{l-1} times a degree-(l-1) polynomial in u
                v.push_back(varphi_local(g, k, l, p, a, order_s));
                if (pa > Q / p) break;
                pa *= p;
            }
        }
    });
}

bool VarphiContext::value(std::uint64_t q, Taylor& out, Real& logq) const {
    out = Taylor(S_, Real(1));
    logq = 0;
    while (q > 1) {
        std::uint64_t p = spf_.spf[q - 1];
        unsigned a = 0;
        while (q % p == 0) {
            q /= p;
            ++a;
        }
        std::uint32_t i = pidx_[p];
        const auto& v = local_[i];
        if (a >= v.size()) return false;
        out = out * v[a];
        logq += Real(a) * logp_[i];
    }
    return true;
}

std::vector<Taylor> varphi_table(const FactoredInteger& h, unsigned k, unsigned l, std::uint64_t Q, int order_s) {
    VarphiContext ctx(h, k, l, Q, order_s);
    std::vector<Taylor> t(Q + 1, Taylor(0));
    Real lq;
    for (std::uint64_t q = 1; q <= Q; ++q) {
        Taylor v;
        if (ctx.value(q, v, lq)) t[q] = v;
    }
    return t;
}

DirichletPartials dirichlet_partials(const FactoredInteger& h, unsigned k, unsigned l, std::uint64_t Q, JetOrders o) {
    VarphiContext ctx(h, k, l, Q, o.s);
    // a fixed number of chunks so the checkpoints do not depend on the thread count
    const std::uint64_t chunk = std::max<std::uint64_t>(1024, (Q + 99) / 100);
    std::size_t nc = chunk_count(1, Q + 1, chunk);
    std::vector<Jet2> part(nc, Jet2(o.s, o.w));
    for_each_chunk(nc, [&](std::size_t c) {
        auto [a, b] = chunk_at(1, Q + 1, chunk, c);
        Taylor v;
        Real lq;
        std::vector<Real> wp(o.w + 1);
        Jet2& acc = part[c];
        for (std::uint64_t q = a; q < b; ++q) {
            if (!ctx.value(q, v, lq)) continue;
            wp[0] = 1;
            for (int j = 1; j <= o.w; ++j) wp[j] = -wp[j - 1] * lq / Real(j);
            for (int i = 0; i <= o.s; ++i)
                for (int j = 0; j <= o.w; ++j) acc(i, j) += v[i] * wp[j];
        }
    });
    DirichletPartials out;
    out.Q = Q;
    out.partials = Jet2(o.s, o.w);
    for (auto& p : part) out.partials += p;
    // remainders S(Q) - S(b) at chunk boundaries b in the upper half
    Jet2 rem(o.s, o.w);
    for (std::size_t c = nc; c-- > 0;) {
        auto [a, b] = chunk_at(1, Q + 1, chunk, c);
        (void)b;
        if (a <= Q / 2) break;
        rem += part[c];
        out.remainders.push_back(rem);
    }
    out.tail_estimate = 0;
    for (auto& r : out.remainders)
        for (auto& x : r.data()) out.tail_estimate = std::max(out.tail_estimate, abs(x));
    return out;
}

}  // namespace adsum
