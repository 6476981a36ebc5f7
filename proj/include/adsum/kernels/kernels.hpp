#pragma once

#include "adsum/real.hpp"

#include <cstddef>
#include <cstdint>

namespace adsum::kernels {

enum class Isa { scalar, avx2 };

Isa detected_isa();
Isa active_isa();
// Restricts dispatch; requesting avx2 on a machine without it is a config error.
void force_isa(Isa isa);
void reset_isa();
const char* isa_name(Isa isa);

// sum a[i]*b[i]; max_product bounds every a[i]*b[i] and selects the flush interval
u128 dot_u32(const std::uint32_t* a, const std::uint32_t* b, std::size_t n, std::uint64_t max_product);
std::uint64_t sum_u32(const std::uint32_t* a, std::size_t n);

namespace scalar {
u128 dot_u32(const std::uint32_t* a, const std::uint32_t* b, std::size_t n);
std::uint64_t sum_u32(const std::uint32_t* a, std::size_t n);
}  // namespace scalar

namespace avx2 {
u128 dot_u32(const std::uint32_t* a, const std::uint32_t* b, std::size_t n, std::uint64_t max_product);
std::uint64_t sum_u32(const std::uint32_t* a, std::size_t n);
}  // namespace avx2

}  // namespace adsum::kernels
