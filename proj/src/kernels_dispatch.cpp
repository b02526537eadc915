#include <atomic>

#include "boxrep/kernels.hpp"

namespace boxrep::kernels {

namespace {

std::atomic<Isa>& active_slot() {
    static std::atomic<Isa> slot{best_available_isa()};
    return slot;
}

}  // namespace

const char* isa_name(Isa isa) noexcept {
    switch (isa) {
        case Isa::scalar: return "scalar";
        case Isa::avx2: return "avx2";
        case Isa::neon: return "neon";
    }
    return "unknown";
}

bool isa_available(Isa isa) noexcept {
    switch (isa) {
        case Isa::scalar: return true;
        case Isa::avx2:
#if defined(__x86_64__) || defined(_M_X64)
            return __builtin_cpu_supports("avx2");
#else
            return false;
#endif
        case Isa::neon:
#if defined(__aarch64__)
            return true;
#else
            return false;
#endif
    }
    return false;
}

Isa best_available_isa() noexcept {
    if (isa_available(Isa::avx2)) return Isa::avx2;
    if (isa_available(Isa::neon)) return Isa::neon;
    return Isa::scalar;
}

Isa active_isa() noexcept { return active_slot().load(std::memory_order_relaxed); }

bool set_active_isa(Isa isa) noexcept {
    if (!isa_available(isa)) return false;
    active_slot().store(isa, std::memory_order_relaxed);
    return true;
}

void overlap_and(std::span<const std::int64_t> left, std::span<const std::int64_t> right, std::int64_t lo,
                 std::int64_t hi, std::span<std::uint64_t> row) noexcept {
    switch (active_isa()) {
#if defined(__x86_64__) || defined(_M_X64)
        case Isa::avx2: overlap_and_avx2(left, right, lo, hi, row); return;
#endif
#if defined(__aarch64__)
        case Isa::neon: overlap_and_neon(left, right, lo, hi, row); return;
#endif
        default: overlap_and_scalar(left, right, lo, hi, row); return;
    }
}

}  // namespace boxrep::kernels
