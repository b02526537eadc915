// Compiled with -mavx2; only reached through the dispatcher after a CPU check.
#include <immintrin.h>

#include "boxrep/kernels.hpp"

namespace boxrep::kernels {

void overlap_and_avx2(std::span<const std::int64_t> left, std::span<const std::int64_t> right, std::int64_t lo,
                      std::int64_t hi, std::span<std::uint64_t> row) noexcept {
    const std::size_t n = left.size();
    const __m256i vhi = _mm256_set1_epi64x(hi);
    const __m256i vlo = _mm256_set1_epi64x(lo);
    std::size_t v = 0;
    for (; v + 4 <= n; v += 4) {
        const __m256i l = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(left.data() + v));
        const __m256i r = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(right.data() + v));
        // miss <=> l > hi || lo > r
        const __m256i miss = _mm256_or_si256(_mm256_cmpgt_epi64(l, vhi), _mm256_cmpgt_epi64(vlo, r));
        const auto bits = static_cast<std::uint64_t>(_mm256_movemask_pd(_mm256_castsi256_pd(miss)));
        // v is a multiple of 4, so the 4 lanes never straddle a word.
        row[v >> 6] &= ~(bits << (v & 63));
    }
    for (; v < n; ++v) {
        if (left[v] > hi || right[v] < lo) row[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }
}

}  // namespace boxrep::kernels
