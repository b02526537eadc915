#include "boxrep/kernels.hpp"

namespace boxrep::kernels {

void overlap_and_scalar(std::span<const std::int64_t> left, std::span<const std::int64_t> right, std::int64_t lo,
                        std::int64_t hi, std::span<std::uint64_t> row) noexcept {
    const std::size_t n = left.size();
    for (std::size_t v = 0; v < n; ++v) {
        if (left[v] > hi || right[v] < lo) row[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }
}

}  // namespace boxrep::kernels
