#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace boxrep {

using Edge = std::pair<int, int>;

/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<int>;

/// Simple undirected graph on vertices 0..n-1, adjacency held as one bitset row per vertex.
///
/// Edge-set equality is graph equality. Instances are treated as values: the
/// pipeline operations never mutate their inputs.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    /// Validating constructor. Duplicate edges collapse; out-of-range ids and
    /// self-loops raise InputError naming the pair.
    static Graph from_edges(int n, std::span<const Edge> edges);
    static Graph complete(int n);

    int size() const noexcept { return n_; }
    int words_per_row() const noexcept { return words_; }

    bool adjacent(int u, int v) const noexcept {
        return (rows_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1u;
    }
    std::span<const std::uint64_t> row(int u) const noexcept {
        return {rows_.data() + static_cast<std::size_t>(u) * words_, static_cast<std::size_t>(words_)};
    }
    std::span<std::uint64_t> mutable_row(int u) noexcept {
        return {rows_.data() + static_cast<std::size_t>(u) * words_, static_cast<std::size_t>(words_)};
    }

    void add_edge(int u, int v) noexcept;
    void remove_edge(int u, int v) noexcept;

    int degree(int u) const noexcept;
    std::vector<int> neighbors(int u) const;
    long long edge_count() const noexcept;
    /// All edges (u, v) with u < v in lexicographic order.
    std::vector<Edge> edges() const;
    bool is_complete() const noexcept;
    bool is_subgraph_of(const Graph& other) const noexcept;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    int n_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> rows_;
};

struct InducedSubgraph {
    Graph graph;
    /// to_parent[i] is the id in the original graph of vertex i.
    std::vector<int> to_parent;
};

/// Sorts and dedups W, raising InputError on any id outside [0, n).
VertexSet normalize_vertex_set(int n, std::span<const int> w);
VertexSet complement_set(int n, const VertexSet& w);

InducedSubgraph induced_subgraph(const Graph& g, std::span<const int> w);
/// Supergraph of g in which W is a clique.
Graph clique_complete(const Graph& g, std::span<const int> w);
/// Supergraph of g in which every vertex of W is adjacent to all others.
Graph make_universal(const Graph& g, std::span<const int> w);
/// Edge-wise intersection of two graphs on the same vertex set.
Graph intersect(const Graph& a, const Graph& b);

std::string format_edge(const Edge& e);
bool is_connected(const Graph& g);

}  // namespace boxrep
