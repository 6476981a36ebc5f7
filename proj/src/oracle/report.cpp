#include "adsum/oracle/oracle.hpp"

namespace adsum {

void ComparisonReport::add(std::uint64_t x, u128 observed, const Real& predicted) {
    ComparisonRow r;
    r.x = x;
    r.observed = observed;
    r.predicted = predicted;
    Real o = real_from(observed);
    r.ratio = predicted == 0 ? Real(0) : o / predicted;
    r.abs_err = abs(o - predicted);
    r.rel_err = predicted == 0 ? Real(0) : r.abs_err / abs(predicted);
    rows.push_back(r);
}

std::string ComparisonReport::csv() const {
    std::string s = "x,observed,predicted,ratio,abs_err,rel_err\n";
    for (auto& r : rows)
        s += std::to_string(r.x) + "," + to_string(r.observed) + "," + to_string(r.predicted, 20) + "," +
             to_string(r.ratio, 20) + "," + to_string(r.abs_err, 6) + "," + to_string(r.rel_err, 6) + "\n";
    return s;
}

}  // namespace adsum
