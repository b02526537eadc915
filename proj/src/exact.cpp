#include "boxrep/exact.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <map>
#include <memory>
#include <mutex>

#include "boxrep/cover_search.hpp"
#include "boxrep/errors.hpp"

namespace boxrep {

namespace detail {

int pair_index(int u, int v, int n) noexcept {
    if (u > v) std::swap(u, v);
    return u * n - u * (u + 1) / 2 + (v - u - 1);
}

std::uint64_t edge_mask(const Graph& g) {
    std::uint64_t mask = 0;
    for (const auto& [u, v] : g.edges()) mask |= std::uint64_t{1} << pair_index(u, v, g.size());
    return mask;
}

Graph graph_from_mask(std::uint64_t mask, int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if ((mask >> pair_index(u, v, n)) & 1u) g.add_edge(u, v);
    return g;
}

namespace {

// Open-addressing set of visited DFS states (edge mask, shape). Shapes are
// never all-ones, which marks empty slots.
class StateSet {
public:
    StateSet() : slots_(std::size_t{1} << 12, Slot{0, kEmpty}) {}

    bool insert(std::uint64_t edges, std::uint64_t shape) {
        if ((size_ + 1) * 2 > slots_.size()) grow();
        return place(slots_, edges, shape);
    }

private:
    struct Slot {
        std::uint64_t edges;
        std::uint64_t shape;
    };
    static constexpr std::uint64_t kEmpty = ~std::uint64_t{0};

    static std::size_t hash(std::uint64_t edges, std::uint64_t shape) noexcept {
        std::uint64_t h = edges * 0x9E3779B97F4A7C15ull ^ (shape + 0x632BE59BD9B4E019ull) * 0xC2B2AE3D27D4EB4Full;
        return static_cast<std::size_t>(h ^ (h >> 29));
    }

    bool place(std::vector<Slot>& table, std::uint64_t edges, std::uint64_t shape) {
        const std::size_t mask = table.size() - 1;
        for (std::size_t i = hash(edges, shape) & mask;; i = (i + 1) & mask) {
            if (table[i].shape == kEmpty) {
                table[i] = {edges, shape};
                ++size_;
                return true;
            }
            if (table[i].edges == edges && table[i].shape == shape) return false;
        }
    }

    void grow() {
        std::vector<Slot> bigger(slots_.size() * 2, Slot{0, kEmpty});
        size_ = 0;
        for (const auto& s : slots_)
            if (s.shape != kEmpty) place(bigger, s.edges, s.shape);
        slots_ = std::move(bigger);
    }

    std::vector<Slot> slots_;
    std::size_t size_ = 0;
};

class OrderingSearch {
public:
    OrderingSearch(const Graph& constraint, bool unit_only) : n_(constraint.size()), unit_(unit_only) {
        need_.assign(n_, 0);
        for (int u = 0; u < n_; ++u)
            for (int v : constraint.neighbors(u)) need_[u] |= 1u << v;
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v) bit_[u][v] = bit_[v][u] = std::uint64_t{1} << pair_index(u, v, n_);
    }

    std::vector<OrderedSupergraph> run() {
        path_.reserve(2 * n_);
        dfs(0, 0, 0);
        std::vector<OrderedSupergraph> out;
        out.reserve(found_.size());
        for (auto& [mask, ordering] : found_) out.push_back({mask, std::move(ordering)});
        return out;  // std::map keeps ascending mask order
    }

private:
    std::uint64_t shape(std::uint32_t opened, std::uint32_t closed) const {
        if (!unit_) return static_cast<std::uint64_t>(opened) | (static_cast<std::uint64_t>(closed) << 16);
        // open vertices in opening order, 4 bits each, followed by the closed set
        std::uint64_t seq = 0;
        int slot = 0;
        for (int v : queue_) seq |= static_cast<std::uint64_t>(v + 1) << (4 * slot++);
        return seq | (static_cast<std::uint64_t>(closed) << 44);
    }

    void dfs(std::uint32_t opened, std::uint32_t closed, std::uint64_t edges) {
        const std::uint32_t all = n_ == 32 ? ~0u : ((1u << n_) - 1);
        if (closed == all) {
            found_.try_emplace(edges, path_);
            return;
        }
        if (!seen_.insert(edges, shape(opened, closed))) return;

        const std::uint32_t open = opened & ~closed;
        for (int v = 0; v < n_; ++v) {
            const std::uint32_t b = 1u << v;
            if (!(opened & b)) {
                std::uint64_t added = 0;
                for (std::uint32_t o = open; o; o &= o - 1) added |= bit_[v][std::countr_zero(o)];
                path_.push_back(static_cast<std::uint8_t>(2 * v));
                if (unit_) queue_.push_back(v);
                dfs(opened | b, closed, edges | added);
                if (unit_) queue_.pop_back();
                path_.pop_back();
            } else if ((open & b) && (need_[v] & ~opened) == 0) {
                if (unit_ && queue_.front() != v) continue;
                path_.push_back(static_cast<std::uint8_t>(2 * v + 1));
                if (unit_) queue_.erase(queue_.begin());
                dfs(opened, closed | b, edges);
                if (unit_) queue_.insert(queue_.begin(), v);
                path_.pop_back();
            }
        }
    }

    int n_;
    bool unit_;
    std::vector<std::uint32_t> need_;
    std::uint64_t bit_[kExactHardCap][kExactHardCap]{};
    EndpointOrdering path_;
    std::vector<int> queue_;
    StateSet seen_;
    std::map<std::uint64_t, EndpointOrdering> found_;
};

}  // namespace

std::vector<OrderedSupergraph> search_orderings(const Graph& constraint, bool unit_only) {
    if (constraint.size() > kExactHardCap) throw SizeGuardError("exact vertices", constraint.size(), kExactHardCap);
    return OrderingSearch(constraint, unit_only).run();
}

const std::vector<OrderedSupergraph>& catalogue(int n, bool unit_only) {
    static std::mutex mutex;
    static std::map<std::pair<int, bool>, std::unique_ptr<const std::vector<OrderedSupergraph>>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[{n, unit_only}];
    if (!slot) slot = std::make_unique<const std::vector<OrderedSupergraph>>(search_orderings(Graph(n), unit_only));
    return *slot;
}

}  // namespace detail

namespace {

void guard(const Graph& g, bool unit_only, const ExactLimits& limits) {
    const int limit = unit_only ? limits.max_cube_vertices : limits.max_box_vertices;
    const char* name = unit_only ? "exact-cube vertices" : "exact-box vertices";
    if (g.size() > std::min(limit, kExactHardCap)) throw SizeGuardError(name, g.size(), std::min(limit, kExactHardCap));
}

std::vector<detail::OrderedSupergraph> supergraph_orderings(const Graph& g, bool unit_only) {
    if (g.size() > detail::kCatalogueMaxVertices) return detail::search_orderings(g, unit_only);
    const auto base = detail::edge_mask(g);
    std::vector<detail::OrderedSupergraph> out;
    for (const auto& entry : detail::catalogue(g.size(), unit_only))
        if ((entry.edge_mask & base) == base) out.push_back(entry);
    return out;
}

IntervalRepresentation realize(const EndpointOrdering& ordering, int n, bool unit_only) {
    return unit_only ? realize_unit_ordering(ordering, n) : realize_ordering(ordering, n);
}

BoxRepresentation optimal(const Graph& g, bool unit_only, const ExactLimits& limits) {
    guard(g, unit_only, limits);
    const int n = g.size();
    BoxRepresentation out{n, {}};
    if (g.is_complete()) return out;

    const auto supers = supergraph_orderings(g, unit_only);
    std::vector<int> non_edge_bit;  // pair index of each non-edge
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v)) non_edge_bit.push_back(detail::pair_index(u, v, n));

    std::vector<CoverSet> cover;
    cover.reserve(supers.size());
    for (const auto& s : supers) {
        CoverSet c(non_edge_bit.size());
        for (std::size_t i = 0; i < non_edge_bit.size(); ++i)
            if (!((s.edge_mask >> non_edge_bit[i]) & 1u)) c.set(i);
        cover.push_back(std::move(c));
    }
    const auto keep = maximal_sets(cover);
    std::vector<CoverSet> reduced;
    reduced.reserve(keep.size());
    for (int i : keep) reduced.push_back(cover[i]);

    const auto chosen = find_min_cover(reduced, non_edge_bit.size(), static_cast<int>(non_edge_bit.size()));
    if (!chosen) throw DefectError("exact search found no representation");
    for (int i : *chosen) out.dims.push_back(realize(supers[keep[i]].ordering, n, unit_only));
    require_verified(g, out, unit_only, unit_only ? "optimal_cube_representation" : "optimal_box_representation");
    return out;
}

}  // namespace

std::vector<IntervalSupergraph> enumerate_interval_supergraphs(const Graph& g, bool unit_only,
                                                               const ExactLimits& limits) {
    guard(g, unit_only, limits);
    std::vector<IntervalSupergraph> out;
    for (const auto& s : supergraph_orderings(g, unit_only))
        out.push_back({detail::graph_from_mask(s.edge_mask, g.size()), realize(s.ordering, g.size(), unit_only)});
    return out;
}

BoxRepresentation optimal_box_representation(const Graph& g, const ExactLimits& limits) {
    return optimal(g, false, limits);
}

BoxRepresentation optimal_cube_representation(const Graph& g, const ExactLimits& limits) {
    return optimal(g, true, limits);
}

IntervalRepresentation realize_ordering(const EndpointOrdering& ordering, int n) {
    IntervalRepresentation rep(n);
    for (std::size_t i = 0; i < ordering.size(); ++i) {
        const int v = ordering[i] >> 1;
        auto iv = rep[v];
        if (ordering[i] & 1u) iv.r = static_cast<std::int64_t>(i) + 1;
        else iv.l = static_cast<std::int64_t>(i) + 1;
        rep.set(v, iv);
    }
    return rep;
}

IntervalRepresentation realize_unit_ordering(const EndpointOrdering& ordering, int n) {
    const auto canonical = realize_ordering(ordering, n);
    const Graph target = interval_graph(canonical);

    std::vector<int> order;  // vertices by left end
    for (auto t : ordering)
        if (!(t & 1u)) order.push_back(t >> 1);

    struct Constraint {
        int from, to;
        std::int64_t weight;  // x[to] - x[from] <= weight
    };
    for (std::int64_t length = std::max(n, 1); length <= 4LL * n * n + 4; ++length) {
        std::vector<Constraint> cons;
        for (int i = 0; i + 1 < n; ++i) cons.push_back({i + 1, i, -1});
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                if (target.adjacent(order[i], order[j])) cons.push_back({i, j, length});
                else cons.push_back({j, i, -(length + 1)});
            }
        std::vector<std::int64_t> x(n, 0);
        bool changed = true;
        for (int round = 0; round <= n && changed; ++round) {
            changed = false;
            for (const auto& c : cons)
                if (x[c.from] + c.weight < x[c.to]) {
                    x[c.to] = x[c.from] + c.weight;
                    changed = true;
                }
        }
        if (changed) continue;  // negative cycle: this length is infeasible
        const auto lo = n ? *std::min_element(x.begin(), x.end()) : 0;
        IntervalRepresentation rep(n);
        for (int i = 0; i < n; ++i) rep.set(order[i], {x[i] - lo + 1, x[i] - lo + 1 + length});
        if (interval_graph(rep) == target) return rep;
    }
    throw DefectError("no equal-length realization found for a proper ordering");
}

}  // namespace boxrep
