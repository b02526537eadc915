#include <arm_neon.h>

#include "boxrep/kernels.hpp"

namespace boxrep::kernels {

void overlap_and_neon(std::span<const std::int64_t> left, std::span<const std::int64_t> right, std::int64_t lo,
                      std::int64_t hi, std::span<std::uint64_t> row) noexcept {
    const std::size_t n = left.size();
    const int64x2_t vhi = vdupq_n_s64(hi);
    const int64x2_t vlo = vdupq_n_s64(lo);
    std::size_t v = 0;
    for (; v + 2 <= n; v += 2) {
        const int64x2_t l = vld1q_s64(left.data() + v);
        const int64x2_t r = vld1q_s64(right.data() + v);
        const uint64x2_t miss = vorrq_u64(vcgtq_s64(l, vhi), vcgtq_s64(vlo, r));
        const std::uint64_t bits = (vgetq_lane_u64(miss, 0) & 1u) | ((vgetq_lane_u64(miss, 1) & 1u) << 1);
        row[v >> 6] &= ~(bits << (v & 63));
    }
    for (; v < n; ++v) {
        if (left[v] > hi || right[v] < lo) row[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }
}

}  // namespace boxrep::kernels
