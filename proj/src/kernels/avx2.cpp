#include "adsum/kernels/kernels.hpp"

#include <immintrin.h>

#include <algorithm>

namespace adsum::kernels::avx2 {

namespace {

__attribute__((target("avx2"))) u128 horizontal(__m256i v) {
    alignas(32) std::uint64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), v);
    return u128(lanes[0]) + lanes[1] + lanes[2] + lanes[3];
}

}  // namespace

__attribute__((target("avx2"))) u128 dot_u32(const std::uint32_t* a, const std::uint32_t* b, std::size_t n,
                                             std::uint64_t max_product) {
    // each 64-bit lane receives two products per 8 elements
    std::uint64_t per_lane = max_product == 0 ? (std::uint64_t(1) << 20) : ~std::uint64_t(0) / max_product;
    if (per_lane < 4) return scalar::dot_u32(a, b, n);
    std::size_t block = std::size_t(std::min<std::uint64_t>(per_lane / 2, std::uint64_t(1) << 13)) * 8;

    u128 total = 0;
    std::size_t i = 0;
    std::size_t vec_end = n & ~std::size_t(7);
    while (i < vec_end) {
        std::size_t stop = std::min(vec_end, i + block);
        __m256i acc = _mm256_setzero_si256();
        for (; i < stop; i += 8) {
            __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
            __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
            __m256i even = _mm256_mul_epu32(va, vb);
            __m256i odd = _mm256_mul_epu32(_mm256_srli_epi64(va, 32), _mm256_srli_epi64(vb, 32));
            acc = _mm256_add_epi64(acc, even);
            acc = _mm256_add_epi64(acc, odd);
        }
        total += horizontal(acc);
    }
    total += scalar::dot_u32(a + i, b + i, n - i);
    return total;
}

__attribute__((target("avx2"))) std::uint64_t sum_u32(const std::uint32_t* a, std::size_t n) {
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        acc = _mm256_add_epi64(acc, _mm256_cvtepu32_epi64(_mm256_castsi256_si128(v)));
        acc = _mm256_add_epi64(acc, _mm256_cvtepu32_epi64(_mm256_extracti128_si256(v, 1)));
    }
    return std::uint64_t(horizontal(acc)) + scalar::sum_u32(a + i, n - i);
}

}  // namespace adsum::kernels::avx2
