#pragma once

#include "adsum/arith/factor.hpp"
#include "adsum/euler/euler.hpp"
#include "adsum/real.hpp"
#include "adsum/series/jet2.hpp"

#include <boost/rational.hpp>

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace adsum {

using Rational = boost::rational<std::int64_t>;

// Coefficient of log^m x log^n ... in the primary term, from the jet G of sum varphi(q,s) q^{-w}.
Real b_coeff(unsigned k, unsigned l, unsigned m, unsigned n, const Jet2& G);

// Secondary-term coefficient a_{A,m}; general-l arrangement (w-derivative order j-r).
Real a_coeff(const RationalExponent& A, unsigned k, unsigned l, unsigned m, const Jet2& G);

// Printed arrangement (binomial inside the i-sum, w-derivative order j+l-r-2). Equals a_coeff for l = 2 only.
Real a_coeff_printed(const RationalExponent& A, unsigned k, unsigned l, unsigned m, const Jet2& G);

struct CoefficientTerm {
    char kind;  // 'b' or 'a'
    unsigned m, n;
    Real contribution;
};

struct AsymptoticPolynomial {
    RationalExponent A;
    std::uint64_t h = 1;
    unsigned k = 2, l = 2;
    std::vector<Real> coeffs;  // coefficient of x log^d x
    std::vector<std::vector<CoefficientTerm>> provenance;
    bool out_of_proven_range = false;
    std::string source;
    std::uint64_t truncation = 0;  // P or Q behind G
    Real tail_bound = 0;

    unsigned degree() const { return unsigned(coeffs.size()) - 1; }
    // P(log x), to be multiplied by x
    Real evaluate(const Real& logx) const;
};

AsymptoticPolynomial assemble_polynomial(const RationalExponent& A, std::uint64_t h, unsigned k, unsigned l, const Jet2& G);

struct PolynomialOptions {
    bool use_dirichlet = false;  // Dirichlet partial sums instead of the Euler product
    std::uint64_t P = 1000000;
    std::uint64_t Q = 1000000;
};

AsymptoticPolynomial main_polynomial(const RationalExponent& A, std::uint64_t h, unsigned k, unsigned l,
                                     const PolynomialOptions& opt = {});

Real conjecture_leading(std::uint64_t h, unsigned k, unsigned l, std::uint64_t P = 1000000);

// Exponents of distribution
Rational theta_one(unsigned k);  // theta_{1,k}; k = 3 is g-uniform
Rational theta_exponent(unsigned k, const Rational& g_limsup);
Real theta_exponent(unsigned k, const Real& g_limsup);
Real proven_lower_bound(std::uint64_t h, unsigned k, unsigned l, std::uint64_t P = 1000000);

struct LeadingPrediction {
    Real coefficient;  // of x log^{k+l-2} x
    bool out_of_proven_range;
};

// sum d_k(n+h, A) d_l(n, B): A^{k-1} B^{l-1} C f / ((k-1)!(l-1)!)
LeadingPrediction partial_pair_leading(std::uint64_t h, unsigned k, unsigned l, const RationalExponent& A,
                                       const RationalExponent& B, std::uint64_t P = 1000000);

// leading coefficient for sum d_k(n+h,A) (d_l(n) - B^{1-l} d_l(n,B)), assembled from two predictions
Real bounded_difference_leading(std::uint64_t h, unsigned k, unsigned l, const RationalExponent& A,
                                const RationalExponent& B, std::uint64_t P = 1000000);

struct MobiusSum {
    Real a1, a2;
    Real tail_bound;
    std::uint64_t N;
};

// a' and a'' by direct Moebius summation to N with the partial-summation boundary term
MobiusSum mobius_constants_direct(std::uint64_t N);
// a' and a'' from the Euler product of 1/zeta at s = 2 over p <= P, integral tail
MobiusSum mobius_constants_euler(std::uint64_t P);

struct EstermannResult {
    std::uint64_t h;
    std::array<Real, 3> closed;     // coefficients of x log^2 x, x log x, x
    std::array<Real, 3> assembled;  // through b/a assembly from Dirichlet partials
    std::array<Real, 3> assembled_euler;
    Real tail_bound;
    std::uint64_t Q, P;
    Real max_gap() const;
    bool agrees(const Real& tol) const { return max_gap() <= std::max(tol, tail_bound); }
};

// Both routes against the closed forms; with check set, disagreement beyond max(1e-8, tail) is a consistency error.
EstermannResult estermann_coeffs(std::uint64_t h, std::uint64_t Q = 1000000, std::uint64_t P = 1000000, bool check = true);
std::array<Real, 3> estermann_closed(std::uint64_t h);

Real bareikis_cdf(unsigned k, const Real& A);

struct ApMainTerm {
    Real value;
    bool flagged;  // h = 0 mod q
};
ApMainTerm ap_main_term(std::uint64_t x, std::uint64_t q, std::uint64_t h, unsigned k, const RationalExponent& A);

}  // namespace adsum
