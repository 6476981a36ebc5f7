#pragma once

#include <boost/multiprecision/float128.hpp>

#include <cstdint>
#include <limits>
#include <string>

namespace adsum {

// Working precision for all real-valued series work: IEEE binary128, about 34 digits.
using Real = boost::multiprecision::float128;

using u128 = unsigned __int128;
using i128 = __int128;

inline constexpr int real_digits = 33;
// enough significant digits for an exact text round trip
inline constexpr int real_exact_digits = std::numeric_limits<Real>::max_digits10 - 1;

std::string to_string(const Real& x, int digits = real_digits);
std::string to_string(u128 x);
std::string to_string(i128 x);

inline Real real_from(u128 x) {
    return Real(static_cast<std::uint64_t>(x >> 64)) * Real(18446744073709551616.0) + Real(static_cast<std::uint64_t>(x));
}

}  // namespace adsum
