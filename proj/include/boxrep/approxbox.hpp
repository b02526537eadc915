#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "boxrep/graph.hpp"
#include "boxrep/nicebox.hpp"
#include "boxrep/reps.hpp"

namespace boxrep {

struct ApproxOptions {
    /// Part size k; default derives it from n.
    std::optional<int> part_size;
    /// When set, vertices are shuffled with this seed before blocking.
    std::optional<std::uint64_t> shuffle_seed;
    bool prune = false;
    /// Worker threads for the per-part solves. Output order never depends on it.
    int threads = 1;
    NiceLimits limits;
};

struct ApproxReport {
    int n = 0;
    int k = 0;
    int t = 0;
    /// ceil(n * sqrt(log2 log2 n) / sqrt(log2 n)) for n >= 4, else n.
    int t_formula = 0;
    std::vector<VertexSet> parts;
    std::vector<int> part_dims;
    int dimension_before_prune = 0;
};

struct ApproxResult {
    BoxRepresentation rep;
    ApproxReport report;
};

/// floor(sqrt(log2 n / log2 log2 n)), at least 1, and 1 whenever n <= 4.
int default_part_size(int n);
int formula_part_count(int n);

/// Splits V into t = ceil(n / k) blocks V_i, solves G with V - V_i made a clique
/// optimally for each block, and concatenates the t representations.
ApproxResult approx_box(const Graph& g, const ApproxOptions& options = {});

/// Drops dimensions in ascending index order while the rest still represents g.
BoxRepresentation prune_redundant_dims(const Graph& g, const BoxRepresentation& rep);

}  // namespace boxrep
