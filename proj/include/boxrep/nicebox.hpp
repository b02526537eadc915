#pragma once

// Optimal box representations for graphs whose vertices outside a small set A
// form a clique, searched over "nice" interval supergraphs: the clique shares
// a common point p, and each clique vertex's interval is the tightest one
// around p that still reaches its neighbors in A.

#include <cstdint>
#include <vector>

#include "boxrep/graph.hpp"
#include "boxrep/reps.hpp"

namespace boxrep {

struct NiceLimits {
    int max_remainder = 5;  // |A|
};

/// Relative order of the endpoints of A plus the region that holds p.
struct NiceCandidate {
    /// 2|A| tokens, token = 2 * (index of the vertex in A) + (1 for a right end).
    std::vector<std::uint8_t> ordering;
    /// Region index in [0, 2|A|]: p sits just before token p_slot.
    int p_slot = 0;
};

struct NiceSupergraph {
    Graph graph;
    IntervalRepresentation rep;
    std::int64_t helly_point = 0;
};

/// Realizes a candidate: A-endpoints at 2, 4, ..., 4|A| in token order, p at
/// 2 * p_slot + 1, and each clique vertex v at
/// [min(p, min r_u), max(p, max l_u)] over its G-neighbors u in A.
NiceSupergraph realize_nice(const Graph& g, const VertexSet& a, const NiceCandidate& candidate);

/// All nice interval supergraphs of g with respect to the clique V \ A, one per
/// distinct edge set, in a canonical order.
std::vector<NiceSupergraph> enumerate_nice_supergraphs(const Graph& g, std::span<const int> a,
                                                       const NiceLimits& limits = {});

/// Optimum box representation of g, given that V \ A is a clique.
BoxRepresentation solve_clique_remainder(const Graph& g, std::span<const int> a, const NiceLimits& limits = {});

/// Number of raw candidates (endpoint orders times p placements) for |A| = k.
std::uint64_t nice_candidate_count(int k);

}  // namespace boxrep
