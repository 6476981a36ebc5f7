#include "adsum/errors.hpp"
#include "adsum/kernels/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>

namespace adsum::kernels {

namespace {

Isa probe() {
    if (const char* env = std::getenv("ADSUM_FORCE_SCALAR"); env && std::strcmp(env, "0") != 0) return Isa::scalar;
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") ? Isa::avx2 : Isa::scalar;
}

std::atomic<int> g_forced{-1};

}  // namespace

Isa detected_isa() {
    static const Isa isa = probe();
    return isa;
}

Isa active_isa() {
    int f = g_forced;
    return f < 0 ? detected_isa() : Isa(f);
}

void force_isa(Isa isa) {
    if (isa == Isa::avx2 && detected_isa() != Isa::avx2) fail(ErrorKind::config, "avx2 not available on this machine");
    g_forced = int(isa);
}

void reset_isa() { g_forced = -1; }

const char* isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

u128 dot_u32(const std::uint32_t* a, const std::uint32_t* b, std::size_t n, std::uint64_t max_product) {
    if (active_isa() == Isa::avx2) return avx2::dot_u32(a, b, n, max_product);
    return scalar::dot_u32(a, b, n);
}

std::uint64_t sum_u32(const std::uint32_t* a, std::size_t n) {
    if (active_isa() == Isa::avx2) return avx2::sum_u32(a, n);
    return scalar::sum_u32(a, n);
}

}  // namespace adsum::kernels
