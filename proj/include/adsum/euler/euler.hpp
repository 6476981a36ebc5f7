#pragma once

#include "adsum/arith/factor.hpp"
#include "adsum/real.hpp"
#include "adsum/series/jet2.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace adsum {

struct JetOrders {
    int s = 2, w = 2;
};

// Default orders for the coefficient machinery: one beyond the highest derivative used.
JetOrders default_orders(unsigned k, unsigned l);

// Local summand phi(s, p^alpha) as a series in s-1; gamma is the exponent of p in h.
Taylor phi_local(unsigned gamma, unsigned k, unsigned l, std::uint64_t p, unsigned alpha, int order_s);
Taylor phi_local(const FactoredInteger& h, unsigned k, unsigned l, std::uint64_t p, unsigned alpha, int order_s);

// Dirichlet coefficient varphi(p^alpha, s): local phi series times (1 - p^{-w-1})^{l-1}.
Taylor varphi_local(unsigned gamma, unsigned k, unsigned l, std::uint64_t p, unsigned alpha, int order_s);

// How the f numerator for p | h is built.
enum class FForm {
    summand,  // from the local phi series (default)
    display   // literal two-variable display, kept for comparison; agrees only at s = 1
};

struct LocalFactor {
    std::uint64_t p = 2;
    unsigned gamma = 0, k = 2, l = 2;
    Jet2 value;
};

LocalFactor local_factor_Cf(std::uint64_t p, const FactoredInteger& h, unsigned k, unsigned l, JetOrders orders,
                            FForm form = FForm::summand);
Jet2 local_factor_jet(std::uint64_t p, unsigned gamma, unsigned k, unsigned l, JetOrders orders,
                      FForm form = FForm::summand);

// Euler factor of C(s,w) at p for real (s,w): product-over-bracket form and the expanded form.
Real c_factor_bracketed(std::uint64_t p, unsigned k, unsigned l, const Real& s, const Real& w);
Real c_factor_expanded(std::uint64_t p, unsigned k, unsigned l, const Real& s, const Real& w);

enum class TailMethod {
    prime_zeta,             // exact prime sums over p > P from the prime zeta function
    prime_counting_integral // leading p^{-2} behaviour integrated against dt/log t
};

struct ProductValue {
    Real value;
    Real tail;        // the correction that was applied
    Real tail_bound;  // estimate of what remains after the correction
    std::uint64_t P;
};

ProductValue singular_C(unsigned k, unsigned l, std::uint64_t P = 1000000, const Real& tol = Real(1e-20),
                        TailMethod method = TailMethod::prime_zeta);

Real singular_f(const FactoredInteger& h, unsigned k, unsigned l);

struct EulerJet {
    Jet2 value;
    Real tail_bound;
    std::uint64_t P;
};

// C(s,w) f(s,w) as a jet at (1,0) from the Euler product over p <= P with tail correction.
EulerJet euler_product_jet(const FactoredInteger& h, unsigned k, unsigned l, JetOrders orders,
                           std::uint64_t P = 1000000, FForm form = FForm::summand,
                           TailMethod method = TailMethod::prime_zeta);

// varphi(q, s) for q <= Q; entries for which varphi vanishes identically are empty series of order 0.
std::vector<Taylor> varphi_table(const FactoredInteger& h, unsigned k, unsigned l, std::uint64_t Q, int order_s);

struct DirichletPartials {
    Jet2 partials;      // sum_{q<=Q} varphi(q,s) q^{-w}
    // S(Q) - S(b) for checkpoints b in (Q/2, Q]. The sums oscillate, so the spread of
    // the partial sums over the upper half is the truncation estimate.
    std::vector<Jet2> remainders;
    Real tail_estimate; // max remainder coefficient
    std::uint64_t Q;
};

DirichletPartials dirichlet_partials(const FactoredInteger& h, unsigned k, unsigned l, std::uint64_t Q, JetOrders orders);

struct SingularSeries {
    unsigned k = 2, l = 2;
    FactoredInteger h;
    Real C, f;
    Jet2 partials;
    std::uint64_t Q = 0, P = 0;
    Real tail_bound;
    std::string source;  // "euler" or "dirichlet"
};

// Tail sums sum_{p>P} p^{-N-t} as series in t for N = 2..maxN.
std::vector<Taylor> prime_power_tails(std::uint64_t P, int maxN, int order, TailMethod method);

// Primes up to P cached for repeated Euler products.
const std::vector<std::uint32_t>& primes_cached(std::uint64_t P);

}  // namespace adsum
