#pragma once

// Cube representations parameterized by a vertex cover S. Vertices outside S
// are grouped by neighborhood; one representative per group goes into an
// exactly solved core, and a binary code separates the members of each group.

#include <optional>
#include <vector>

#include "boxrep/exact.hpp"
#include "boxrep/graph.hpp"
#include "boxrep/reps.hpp"

namespace boxrep {

/// Smallest vertex cover (ascending ids) of size at most k_max, or nullopt.
std::optional<VertexSet> min_vertex_cover(const Graph& g, int k_max);

struct PsiLimits {
    int max_vertices = 64;
};

/// Leaves of the largest induced star: max over v of the independence number
/// of G[N(v)]. Zero for an edgeless graph.
int compute_psi(const Graph& g, const PsiLimits& limits = {});

struct NeighborhoodClass {
    VertexSet neighbors;  // the common neighborhood A (subset of the cover)
    VertexSet members;    // N_A, ascending
    int representative() const { return members.front(); }
};

struct NeighborhoodClassing {
    /// Ordered by neighbor list.
    std::vector<NeighborhoodClass> classes;
    int max_class_size = 0;  // t
    /// Per vertex: class index, or -1 for cover vertices.
    std::vector<int> class_of;
    /// Per vertex: 0-based position inside its class, or -1.
    std::vector<int> code_of;
};

/// Raises InputError naming an uncovered edge if `cover` is not a vertex cover.
NeighborhoodClassing classify_neighborhoods(const Graph& g, std::span<const int> cover);

/// ceil(log2 t) for t >= 1, 0 for t <= 1.
int code_bits(int t);

struct CubeMvcReport {
    int p = 0;  // dimensions copied from the core's optimum cube representation
    int q = 0;  // code dimensions
    int t = 0;
    int core_vertices = 0;
    bool connected = true;
};

struct CubeMvcResult {
    BoxRepresentation rep;
    CubeMvcReport report;
};

CubeMvcResult cube_rep_mvc(const Graph& g, std::span<const int> cover, const ExactLimits& limits = {});

struct CubeEpsReport {
    bool oracle_path = false;
    double threshold = 0;  // k (1 + 2^((2k - 1) / eps))
    int k = 0;
    std::optional<CubeMvcReport> construction;
};

struct CubeEpsResult {
    BoxRepresentation rep;
    CubeEpsReport report;
};

double eps_threshold(int k, double eps);

/// Optimum cube representation when n <= threshold, otherwise cube_rep_mvc.
CubeEpsResult cube_rep_mvc_eps(const Graph& g, std::span<const int> cover, double eps,
                               const ExactLimits& limits = {});

}  // namespace boxrep
