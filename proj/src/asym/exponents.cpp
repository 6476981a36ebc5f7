#include "adsum/asym/asym.hpp"
#include "adsum/errors.hpp"

#include <algorithm>

namespace adsum {

namespace {

Real to_real(const Rational& r) { return Real(r.numerator()) / Real(r.denominator()); }

Real factorial(int n) {
    Real f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// theta with the trivially equidistributed d_1 included, used only for validity flags
Rational theta_or_one(unsigned k) { return k == 1 ? Rational(1) : theta_exponent(k, Rational(0)); }

}  // namespace

Rational theta_one(unsigned k) {
    switch (k) {
        case 2: return Rational(2, 3);
        case 3: return Rational(21, 41);
        case 4: return Rational(1, 2);
        case 5: return Rational(9, 20);
        case 6: return Rational(5, 12);
        default:
            if (k >= 7) return Rational(8, 3 * std::int64_t(k));
            fail(ErrorKind::domain, "theta: k must be >= 2");
    }
}

Rational theta_exponent(unsigned k, const Rational& g) {
    if (k < 2) fail(ErrorKind::domain, "theta_exponent: k must be >= 2");
    if (g < 0 || g > 1) fail(ErrorKind::domain, "theta_exponent: limsup outside [0,1]");
    Rational t = theta_one(k);
    if (k == 3) return t;
    return std::max(Rational(1, k), t + (1 - std::int64_t(k) * t) * g);
}

Real theta_exponent(unsigned k, const Real& g) {
    if (k < 2) fail(ErrorKind::domain, "theta_exponent: k must be >= 2");
    if (g < 0 || g > 1) fail(ErrorKind::domain, "theta_exponent: limsup outside [0,1]");
    Rational t = theta_one(k);
    if (k == 3) return to_real(t);
    Real tr = to_real(t);
    return std::max(Real(1) / Real(k), tr + (1 - Real(k) * tr) * g);
}

Real proven_lower_bound(std::uint64_t h, unsigned k, unsigned l, std::uint64_t P) {
    Real th = to_real(theta_exponent(k, Rational(0)));
    return pow(th, int(l) - 1) * conjecture_leading(h, k, l, P);
}

LeadingPrediction partial_pair_leading(std::uint64_t h, unsigned k, unsigned l, const RationalExponent& A,
                                       const RationalExponent& B, std::uint64_t P) {
    Real C = singular_C(k, l, P).value;
    Real f = singular_f(factorize(h), k, l);
    Real Av = Real(A.a) / Real(A.b), Bv = Real(B.a) / Real(B.b);
    LeadingPrediction out;
    out.coefficient = pow(Av, int(k) - 1) * pow(Bv, int(l) - 1) * C * f / (factorial(int(k) - 1) * factorial(int(l) - 1));
    Rational Bq(B.a, B.b), Aq(A.a, A.b);
    Rational bound = std::min(theta_or_one(k), Aq * theta_or_one(k - 1));
    out.out_of_proven_range = !(Bq < bound);
    return out;
}

Real bounded_difference_leading(std::uint64_t h, unsigned k, unsigned l, const RationalExponent& A,
                                const RationalExponent& B, std::uint64_t P) {
    if (B.a == 0) fail(ErrorKind::domain, "bounded difference: B must be positive");
    Real full = partial_pair_leading(h, k, l, A, RationalExponent(1, 1), P).coefficient;
    Real part = partial_pair_leading(h, k, l, A, B, P).coefficient;
    Real Bv = Real(B.a) / Real(B.b);
    return full - pow(Bv, 1 - int(l)) * part;
}

}  // namespace adsum
