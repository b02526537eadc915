#pragma once

// Brute-force oracle: optimum box / cube representations by enumerating every
// (unit) interval supergraph through endpoint orderings, then picking the
// fewest whose edge sets intersect to G.

#include <cstdint>
#include <vector>

#include "boxrep/graph.hpp"
#include "boxrep/reps.hpp"

namespace boxrep {

struct ExactLimits {
    int max_box_vertices = 7;
    int max_cube_vertices = 6;
};

/// Edge sets are packed into one 64-bit word, which caps the oracle at 11 vertices
/// whatever the configured limits say.
inline constexpr int kExactHardCap = 11;

/// 2n tokens; token = 2 * vertex + (1 for a right end). Each vertex's left
/// token precedes its right token. Canonical realization puts token i at i + 1.
using EndpointOrdering = std::vector<std::uint8_t>;

struct IntervalSupergraph {
    Graph graph;
    IntervalRepresentation rep;
};

/// Every interval supergraph of g exactly once, ascending by packed edge mask,
/// each with one realizing representation. With unit_only the supergraphs are
/// unit interval graphs and the representation has equal interval lengths.
std::vector<IntervalSupergraph> enumerate_interval_supergraphs(const Graph& g, bool unit_only,
                                                               const ExactLimits& limits = {});

BoxRepresentation optimal_box_representation(const Graph& g, const ExactLimits& limits = {});
BoxRepresentation optimal_cube_representation(const Graph& g, const ExactLimits& limits = {});

inline int boxicity(const Graph& g, const ExactLimits& limits = {}) {
    return optimal_box_representation(g, limits).dimension();
}
inline int cubicity(const Graph& g, const ExactLimits& limits = {}) {
    return optimal_cube_representation(g, limits).dimension();
}

IntervalRepresentation realize_ordering(const EndpointOrdering& ordering, int n);
/// Equal-length realization of a proper ordering (left ends and right ends in
/// the same vertex order).
IntervalRepresentation realize_unit_ordering(const EndpointOrdering& ordering, int n);

namespace detail {

struct OrderedSupergraph {
    std::uint64_t edge_mask = 0;
    EndpointOrdering ordering;
};

int pair_index(int u, int v, int n) noexcept;
std::uint64_t edge_mask(const Graph& g);
Graph graph_from_mask(std::uint64_t mask, int n);

/// Memoized DFS over endpoint orderings whose interval graph contains
/// `constraint`. No size guard; callers check.
std::vector<OrderedSupergraph> search_orderings(const Graph& constraint, bool unit_only);

/// All labeled (unit) interval graphs on n vertices, built once per process.
const std::vector<OrderedSupergraph>& catalogue(int n, bool unit_only);
inline constexpr int kCatalogueMaxVertices = 7;

}  // namespace detail

}  // namespace boxrep
