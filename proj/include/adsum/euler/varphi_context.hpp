#pragma once

#include "adsum/arith/divisor_table.hpp"
#include "adsum/euler/euler.hpp"

#include <cstdint>
#include <vector>

namespace adsum {

// Local varphi factors for every prime power up to Q, with spf-driven multiplicative lookup.
class VarphiContext {
public:
    VarphiContext(const FactoredInteger& h, unsigned k, unsigned l, std::uint64_t Q, int order_s);

    // varphi(q, s) into out; false when it vanishes identically. logq receives log q.
    bool value(std::uint64_t q, Taylor& out, Real& logq) const;

    std::uint64_t Q() const { return Q_; }
    int order_s() const { return S_; }

private:
    std::uint64_t Q_;
    int S_;
    DivisorTable spf_;
    std::vector<std::uint32_t> pidx_;
    std::vector<Real> logp_;
    std::vector<std::vector<Taylor>> local_;  // [prime index][alpha], empty when zero from alpha on
};

}  // namespace adsum
