#include "boxrep/reps.hpp"

#include <algorithm>
#include <bit>

#include "boxrep/errors.hpp"
#include "boxrep/kernels.hpp"

namespace boxrep {

IntervalRepresentation::IntervalRepresentation(std::span<const Interval> intervals) {
    left_.reserve(intervals.size());
    right_.reserve(intervals.size());
    for (const auto& iv : intervals) {
        left_.push_back(iv.l);
        right_.push_back(iv.r);
    }
}

std::int64_t IntervalRepresentation::min_left() const noexcept {
    return left_.empty() ? 0 : *std::min_element(left_.begin(), left_.end());
}

std::int64_t IntervalRepresentation::max_right() const noexcept {
    return right_.empty() ? 0 : *std::max_element(right_.begin(), right_.end());
}

BoxRepresentation concat(const BoxRepresentation& a, const BoxRepresentation& b) {
    if (a.n != b.n)
        throw InputError("cannot concatenate representations on " + std::to_string(a.n) + " and " +
                         std::to_string(b.n) + " vertices");
    BoxRepresentation out = a;
    out.dims.insert(out.dims.end(), b.dims.begin(), b.dims.end());
    return out;
}

namespace {

void check_dims(const BoxRepresentation& rep) {
    for (int i = 0; i < rep.dimension(); ++i)
        if (rep.dims[i].size() != rep.n)
            throw InputError("dimension " + std::to_string(i) + " covers " + std::to_string(rep.dims[i].size()) +
                             " vertices, expected " + std::to_string(rep.n));
}

void fill_all_but_self(Graph& g) {
    const int n = g.size();
    for (int u = 0; u < n; ++u) {
        auto row = g.mutable_row(u);
        for (int w = 0; w < g.words_per_row(); ++w) {
            const int hi = std::min(64, n - w * 64);
            row[w] = hi == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << hi) - 1);
        }
        row[u >> 6] &= ~(std::uint64_t{1} << (u & 63));
    }
}

}  // namespace

Graph interval_graph(const IntervalRepresentation& rep) {
    BoxRepresentation box{rep.size(), {rep}};
    return intersection_graph(box);
}

Graph intersection_graph(const BoxRepresentation& rep) {
    check_dims(rep);
    Graph g(rep.n);
    fill_all_but_self(g);
    for (const auto& dim : rep.dims) {
        for (int u = 0; u < rep.n; ++u) {
            const auto iv = dim[u];
            kernels::overlap_and(dim.left(), dim.right(), iv.l, iv.r, g.mutable_row(u));
        }
    }
    // A malformed interval (l > r) misses itself; keep the diagonal clear.
    for (int u = 0; u < rep.n; ++u) g.mutable_row(u)[u >> 6] &= ~(std::uint64_t{1} << (u & 63));
    return g;
}

Verification verify_representation(const Graph& g, const BoxRepresentation& rep, bool require_cube) {
    if (g.size() != rep.n)
        throw InputError("representation has " + std::to_string(rep.n) + " vertices, graph has " +
                         std::to_string(g.size()));
    check_dims(rep);
    Verification out;
    for (int i = 0; i < rep.dimension(); ++i) {
        for (int v = 0; v < rep.n; ++v) {
            if (rep.dims[i][v].l > rep.dims[i][v].r) {
                out.valid = false;
                out.dimension = i;
                out.reason = "vertex " + std::to_string(v) + " has l > r";
                return out;
            }
        }
    }
    const Graph h = intersection_graph(rep);
    for (int u = 0; u < g.size() && out.valid; ++u) {
        auto a = g.row(u);
        auto b = h.row(u);
        for (int w = 0; w < g.words_per_row(); ++w) {
            std::uint64_t diff = a[w] ^ b[w];
            // only pairs with v > u
            if (w == (u >> 6)) diff &= (u & 63) == 63 ? 0 : (~std::uint64_t{0} << ((u & 63) + 1));
            else if (w < (u >> 6)) diff = 0;
            if (diff) {
                const int v = w * 64 + std::countr_zero(diff);
                out.valid = false;
                out.witness = Edge{u, v};
                out.witness_in_graph = g.adjacent(u, v);
                out.reason = out.witness_in_graph ? "edge missing from representation"
                                                  : "representation has an extra edge";
                break;
            }
        }
    }
    if (!out.valid) return out;
    if (require_cube) {
        for (int i = 0; i < rep.dimension(); ++i) {
            const auto& dim = rep.dims[i];
            for (int v = 1; v < rep.n; ++v) {
                if (dim[v].r - dim[v].l != dim[0].r - dim[0].l) {
                    out.valid = false;
                    out.dimension = i;
                    out.reason = "interval lengths differ (vertex " + std::to_string(v) + ")";
                    return out;
                }
            }
        }
    }
    return out;
}

void require_verified(const Graph& g, const BoxRepresentation& rep, bool require_cube, const std::string& context) {
    auto v = verify_representation(g, rep, require_cube);
    if (!v.valid) throw DefectError(context + ": output does not verify: " + describe(v));
}

std::string describe(const Verification& v) {
    if (v.valid) return "valid";
    std::string s = v.reason;
    if (v.witness) s += ", witness " + format_edge(*v.witness);
    if (v.dimension) s += ", dimension " + std::to_string(*v.dimension);
    return s;
}

BoxRepresentation extend_universal(const Graph& g, std::span<const int> s, const BoxRepresentation& rep_of_s) {
    const auto inside = normalize_vertex_set(g.size(), s);
    const auto outside = complement_set(g.size(), inside);
    for (int v : outside)
        if (g.degree(v) != g.size() - 1)
            throw InputError("vertex " + std::to_string(v) + " outside S is not universal");
    const auto sub = induced_subgraph(g, inside);
    if (rep_of_s.n != sub.graph.size())
        throw InputError("representation of G[S] has " + std::to_string(rep_of_s.n) + " vertices, |S| = " +
                         std::to_string(sub.graph.size()));
    if (auto check = verify_representation(sub.graph, rep_of_s); !check.valid)
        throw InputError("representation of G[S] is invalid: " + describe(check));

    BoxRepresentation out{g.size(), {}};
    for (const auto& dim : rep_of_s.dims) {
        IntervalRepresentation lifted(g.size());
        const Interval span{dim.min_left(), dim.max_right()};
        for (int v : outside) lifted.set(v, span);
        for (std::size_t i = 0; i < inside.size(); ++i) lifted.set(inside[i], dim[static_cast<int>(i)]);
        out.dims.push_back(std::move(lifted));
    }
    return out;
}

BoxRepresentation clique_double(const Graph& g, std::span<const int> a, const BoxRepresentation& rep) {
    const auto stretched = normalize_vertex_set(g.size(), a);
    if (auto check = verify_representation(g, rep); !check.valid)
        throw InputError("input representation is invalid: " + describe(check));
    BoxRepresentation out{g.size(), {}};
    for (const auto& dim : rep.dims) {
        const auto lo = dim.min_left();
        const auto hi = dim.max_right();
        IntervalRepresentation first = dim;
        IntervalRepresentation second = dim;
        for (int v : stretched) {
            first.set(v, {lo, dim[v].r});
            second.set(v, {dim[v].l, hi});
        }
        out.dims.push_back(std::move(first));
        out.dims.push_back(std::move(second));
    }
    return out;
}

}  // namespace boxrep
