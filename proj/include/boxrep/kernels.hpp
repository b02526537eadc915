#pragma once

// Data-parallel inner loop of intersection-graph construction: for a query
// interval [lo, hi], mask out every vertex whose interval misses it.
//
// Variants: a scalar reference, AVX2 (x86-64) and NEON (aarch64). The active
// variant is picked at first use from what the CPU reports and can be pinned
// for equivalence testing.

#include <cstdint>
#include <span>

namespace boxrep::kernels {

enum class Isa { scalar, avx2, neon };

const char* isa_name(Isa isa) noexcept;
bool isa_available(Isa isa) noexcept;
Isa best_available_isa() noexcept;
Isa active_isa() noexcept;
/// Returns false (and changes nothing) if the CPU or the build lacks the variant.
bool set_active_isa(Isa isa) noexcept;

/// Clears bit v of `row` for every v < left.size() whose closed interval
/// [left[v], right[v]] does not meet [lo, hi]. Bits at and past left.size()
/// are left untouched. `row` must hold ceil(left.size() / 64) words.
void overlap_and(std::span<const std::int64_t> left, std::span<const std::int64_t> right, std::int64_t lo,
                 std::int64_t hi, std::span<std::uint64_t> row) noexcept;

void overlap_and_scalar(std::span<const std::int64_t> left, std::span<const std::int64_t> right, std::int64_t lo,
                        std::int64_t hi, std::span<std::uint64_t> row) noexcept;
#if defined(__x86_64__) || defined(_M_X64)
void overlap_and_avx2(std::span<const std::int64_t> left, std::span<const std::int64_t> right, std::int64_t lo,
                      std::int64_t hi, std::span<std::uint64_t> row) noexcept;
#endif
#if defined(__aarch64__)
void overlap_and_neon(std::span<const std::int64_t> left, std::span<const std::int64_t> right, std::int64_t lo,
                      std::int64_t hi, std::span<std::uint64_t> row) noexcept;
#endif

}  // namespace boxrep::kernels
