#pragma once

#include "adsum/arith/factor.hpp"
#include "adsum/real.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace adsum {

struct CorrelationResult {
    std::uint64_t h = 1;
    unsigned k = 2, l = 2;
    RationalExponent A, B;
    std::uint64_t x = 0;
    u128 value = 0;
    double wall_time = 0;  // seconds; never written to reports
};

// sum_{n<=x} d_k(n+h, A) d_l(n, B), exact
CorrelationResult brute_correlation(std::uint64_t h, unsigned k, unsigned l, const RationalExponent& A,
                                    const RationalExponent& B, std::uint64_t x);

// Same sum at several cutoffs from one pair of tables; xs ascending.
std::vector<CorrelationResult> brute_correlation_series(std::uint64_t h, unsigned k, unsigned l, const RationalExponent& A,
                                                        const RationalExponent& B, const std::vector<std::uint64_t>& xs);

// sum_{n<=x, n = h mod q} d_k(n, A), exact
u128 brute_ap_sum(std::uint64_t x, std::uint64_t q, std::uint64_t h, unsigned k, const RationalExponent& A);

// Which element of the progression the lower boundary q^{1/A}+h-delta names.
enum class DeltaConvention {
    one_if_integer,  // delta = 1 when q^{1/A} is an integer
    zero_if_integer  // delta = 0 when q^{1/A} is an integer
};

int delta_A(std::uint64_t q, const RationalExponent& A, DeltaConvention c);

struct DeltaIdentity {
    u128 direct;       // sum_{n<=x} d_k(n+h) d_l(n,A)
    u128 regrouped;    // sum_q d_{l-1}(q) [S_q(x+h) - S_q(q^{1/A}+h-delta)]
    bool holds() const { return direct == regrouped; }
};

// Regrouping of the correlation sum by the divisor q of n, with the progression sums
// S_q(y) = sum_{m<=y, m = h mod q} d_k(m) cut at q^{1/A}+h-delta.
DeltaIdentity delta_identity(std::uint64_t h, unsigned k, unsigned l, const RationalExponent& A, std::uint64_t x,
                             DeltaConvention c);

// Residue pipelines at truncation Q: coefficient of x log^d x in the primary and secondary terms.
struct ResidueResult {
    std::uint64_t h = 1;
    unsigned k = 2, l = 2;
    RationalExponent A;
    std::uint64_t Q = 0;
    std::vector<Real> primary;    // Z route
    std::vector<Real> secondary;  // W route
    // relative change of the W-route value at x = Q^{1/A} when q^{s/A} is replaced by (q^{1/A}+h-delta)^s
    Real exact_weight_gap = 0;
};

ResidueResult residue_secondary(std::uint64_t h, unsigned k, unsigned l, const RationalExponent& A, std::uint64_t Q);

struct ResidueComparison {
    ResidueResult oracle;
    std::vector<Real> primary_assembled, secondary_assembled;
    Real primary_rel = 0, secondary_rel = 0;  // max coefficient gap over the largest coefficient
};

// Residue oracle against the b/a assembly from Dirichlet partials at the same Q.
ResidueComparison compare_residue(std::uint64_t h, unsigned k, unsigned l, const RationalExponent& A, std::uint64_t Q);

struct EmpiricalDistribution {
    unsigned k = 2;
    RationalExponent A;
    std::uint64_t x = 0;
    std::string mean_exact;  // reduced fraction
    Real mean = 0;
    std::vector<std::uint64_t> histogram;  // bins of width 1/bins over [0,1]; ratio 1 goes to the last bin
    u128 partial_sum = 0;                  // sum d_k(n,A)
    u128 full_sum = 0;                     // sum d_k(n)
    Real diffb_residual = 0;               // |partial_sum - A^{k-1} full_sum| / x
};

EmpiricalDistribution empirical_distribution(unsigned k, const RationalExponent& A, std::uint64_t x, unsigned bins = 20);

struct ComparisonRow {
    std::uint64_t x;
    u128 observed;
    Real predicted;
    Real ratio, abs_err, rel_err;
};

struct ComparisonReport {
    std::string label;
    std::vector<ComparisonRow> rows;
    void add(std::uint64_t x, u128 observed, const Real& predicted);
    std::string csv() const;
};

}  // namespace adsum
