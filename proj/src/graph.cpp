#include "boxrep/graph.hpp"

#include <algorithm>
#include <bit>

#include "boxrep/errors.hpp"

namespace boxrep {

Graph::Graph(int n) : n_(n), words_((n + 63) / 64), rows_(static_cast<std::size_t>(n) * ((n + 63) / 64), 0) {
    if (n < 0) throw InputError("negative vertex count " + std::to_string(n));
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
    Graph g(n);
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw InputError("edge " + format_edge({u, v}) + " has a vertex outside [0, " + std::to_string(n) + ")");
        if (u == v) throw InputError("self-loop " + format_edge({u, v}));
        g.add_edge(u, v);
    }
    return g;
}

Graph Graph::complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

void Graph::add_edge(int u, int v) noexcept {
    rows_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
    rows_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
}

void Graph::remove_edge(int u, int v) noexcept {
    rows_[static_cast<std::size_t>(u) * words_ + (v >> 6)] &= ~(std::uint64_t{1} << (v & 63));
    rows_[static_cast<std::size_t>(v) * words_ + (u >> 6)] &= ~(std::uint64_t{1} << (u & 63));
}

int Graph::degree(int u) const noexcept {
    int d = 0;
    for (auto w : row(u)) d += std::popcount(w);
    return d;
}

std::vector<int> Graph::neighbors(int u) const {
    std::vector<int> out;
    auto r = row(u);
    for (int w = 0; w < words_; ++w) {
        for (auto bits = r[w]; bits != 0; bits &= bits - 1)
            out.push_back(w * 64 + std::countr_zero(bits));
    }
    return out;
}

long long Graph::edge_count() const noexcept {
    long long total = 0;
    for (auto w : rows_) total += std::popcount(w);
    return total / 2;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u)
        for (int v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

bool Graph::is_complete() const noexcept {
    return edge_count() == static_cast<long long>(n_) * (n_ - 1) / 2;
}

bool Graph::is_subgraph_of(const Graph& other) const noexcept {
    if (n_ != other.n_) return false;
    for (std::size_t i = 0; i < rows_.size(); ++i)
        if (rows_[i] & ~other.rows_[i]) return false;
    return true;
}

VertexSet normalize_vertex_set(int n, std::span<const int> w) {
    VertexSet out(w.begin(), w.end());
    for (int v : out)
        if (v < 0 || v >= n)
            throw InputError("vertex " + std::to_string(v) + " outside [0, " + std::to_string(n) + ")");
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

VertexSet complement_set(int n, const VertexSet& w) {
    VertexSet out;
    std::size_t i = 0;
    for (int v = 0; v < n; ++v) {
        if (i < w.size() && w[i] == v) {
            ++i;
            continue;
        }
        out.push_back(v);
    }
    return out;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const int> w) {
    auto verts = normalize_vertex_set(g.size(), w);
    InducedSubgraph out{Graph(static_cast<int>(verts.size())), verts};
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (g.adjacent(verts[i], verts[j])) out.graph.add_edge(static_cast<int>(i), static_cast<int>(j));
    return out;
}

Graph clique_complete(const Graph& g, std::span<const int> w) {
    auto verts = normalize_vertex_set(g.size(), w);
    Graph out = g;
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j) out.add_edge(verts[i], verts[j]);
    return out;
}

Graph make_universal(const Graph& g, std::span<const int> w) {
    auto verts = normalize_vertex_set(g.size(), w);
    Graph out = g;
    for (int u : verts)
        for (int v = 0; v < g.size(); ++v)
            if (v != u) out.add_edge(u, v);
    return out;
}

Graph intersect(const Graph& a, const Graph& b) {
    if (a.size() != b.size())
        throw InputError("cannot intersect graphs on " + std::to_string(a.size()) + " and " +
                         std::to_string(b.size()) + " vertices");
    Graph out = a;
    for (int u = 0; u < a.size(); ++u) {
        auto dst = out.mutable_row(u);
        auto src = b.row(u);
        for (std::size_t w = 0; w < dst.size(); ++w) dst[w] &= src[w];
    }
    return out;
}

std::string format_edge(const Edge& e) {
    return "(" + std::to_string(e.first) + "," + std::to_string(e.second) + ")";
}

bool is_connected(const Graph& g) {
    if (g.size() <= 1) return true;
    std::vector<char> seen(g.size(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : g.neighbors(u))
            if (!seen[v]) {
                seen[v] = 1;
                ++reached;
                stack.push_back(v);
            }
    }
    return reached == g.size();
}

}  // namespace boxrep
