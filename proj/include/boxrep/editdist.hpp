#pragma once

// Box representations from a modulator: a small vertex set (or a small set of
// toggled pairs) whose removal lands G in a base family for which a
// representation is already known.

#include <vector>

#include "boxrep/exact.hpp"
#include "boxrep/graph.hpp"
#include "boxrep/nicebox.hpp"
#include "boxrep/reps.hpp"

namespace boxrep {

struct VertexModulator {
    VertexSet vertices;
};

/// `added` pairs are edges of G missing from the base graph; `deleted` pairs
/// are non-edges of G present in the base graph.
struct EdgeModulator {
    std::vector<Edge> added;
    std::vector<Edge> deleted;
};

/// Base graph G' = (E(G) + deleted) - added. Raises InputError naming the first
/// pair that breaks the modulator's contract.
Graph edge_modulator_base(const Graph& g, const EdgeModulator& m);
/// Endpoints of all modulator pairs.
VertexSet edge_modulator_span(const Graph& g, const EdgeModulator& m);

struct SplitRepresentation {
    BoxRepresentation rep;  // first.dims followed by second.dims
    BoxRepresentation first;
    BoxRepresentation second;
};

/// Vertex modulator pipeline. `base` represents G - S over the remaining
/// vertices in ascending id order. first: optimal representation of G with
/// V - S made a clique; second: the base representation lifted to G with S
/// made universal.
SplitRepresentation box_rep_fkv(const Graph& g, const VertexModulator& s, const BoxRepresentation& base,
                                const NiceLimits& limits = {});

/// Edge modulator pipeline. `base` represents G' on all n vertices. first:
/// clique_double of the base over the modulator span S; second: an optimal
/// representation of G[S] lifted to G with V - S made universal.
SplitRepresentation box_rep_fke(const Graph& g, const EdgeModulator& m, const BoxRepresentation& base,
                                const ExactLimits& limits = {});

}  // namespace boxrep
