#include "adsum/kernels/kernels.hpp"

namespace adsum::kernels::scalar {

u128 dot_u32(const std::uint32_t* a, const std::uint32_t* b, std::size_t n) {
    u128 acc = 0;
    for (std::size_t i = 0; i < n; ++i) acc += std::uint64_t(a[i]) * b[i];
    return acc;
}

std::uint64_t sum_u32(const std::uint32_t* a, std::size_t n) {
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < n; ++i) acc += a[i];
    return acc;
}

}  // namespace adsum::kernels::scalar
