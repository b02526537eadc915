#include "boxrep/nicebox.hpp"

#include <algorithm>
#include <map>

#include "boxrep/cover_search.hpp"
#include "boxrep/errors.hpp"
#include "boxrep/kernels.hpp"

namespace boxrep {

namespace {

VertexSet checked_remainder(const Graph& g, std::span<const int> a, const NiceLimits& limits) {
    auto set = normalize_vertex_set(g.size(), a);
    if (static_cast<int>(set.size()) > limits.max_remainder)
        throw SizeGuardError("clique remainder |A|", static_cast<long long>(set.size()), limits.max_remainder);
    const auto clique = complement_set(g.size(), set);
    for (std::size_t i = 0; i < clique.size(); ++i)
        for (std::size_t j = i + 1; j < clique.size(); ++j)
            if (!g.adjacent(clique[i], clique[j]))
                throw InputError("V \\ A is not a clique: " + format_edge({clique[i], clique[j]}) + " is a non-edge");
    return set;
}

/// Endpoint orders with each left token before its right token, in
/// lexicographic token order.
void for_each_endpoint_order(int k, const auto& visit) {
    std::vector<std::uint8_t> seq;
    std::vector<int> state(k, 0);  // 0 unplaced, 1 left placed, 2 both placed
    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(seq.size()) == 2 * k) {
            visit(seq);
            return;
        }
        for (int i = 0; i < k; ++i) {
            if (state[i] == 2) continue;
            seq.push_back(static_cast<std::uint8_t>(2 * i + state[i]));
            ++state[i];
            self(self);
            --state[i];
            seq.pop_back();
        }
    };
    rec(rec);
}

}  // namespace

std::uint64_t nice_candidate_count(int k) {
    std::uint64_t orders = 1;
    for (int i = 1; i <= 2 * k; ++i) orders *= static_cast<std::uint64_t>(i);
    orders >>= k;
    return orders * static_cast<std::uint64_t>(2 * k + 1);
}

NiceSupergraph realize_nice(const Graph& g, const VertexSet& a, const NiceCandidate& candidate) {
    const int n = g.size();
    const int k = static_cast<int>(a.size());
    std::vector<Interval> a_iv(k);
    for (std::size_t i = 0; i < candidate.ordering.size(); ++i) {
        const auto t = candidate.ordering[i];
        const std::int64_t x = 2 * (static_cast<std::int64_t>(i) + 1);
        if (t & 1u) a_iv[t >> 1].r = x;
        else a_iv[t >> 1].l = x;
    }
    const std::int64_t p = 2 * static_cast<std::int64_t>(candidate.p_slot) + 1;

    std::vector<int> index_in_a(n, -1);
    for (int i = 0; i < k; ++i) index_in_a[a[i]] = i;

    IntervalRepresentation rep(n);
    for (int v = 0; v < n; ++v) {
        if (index_in_a[v] >= 0) {
            rep.set(v, a_iv[index_in_a[v]]);
            continue;
        }
        Interval iv{p, p};
        for (int i = 0; i < k; ++i)
            if (g.adjacent(v, a[i])) {
                iv.l = std::min(iv.l, a_iv[i].r);
                iv.r = std::max(iv.r, a_iv[i].l);
            }
        rep.set(v, iv);
    }
    return {interval_graph(rep), std::move(rep), p};
}

std::vector<NiceSupergraph> enumerate_nice_supergraphs(const Graph& g, std::span<const int> a_in,
                                                       const NiceLimits& limits) {
    const auto a = checked_remainder(g, a_in, limits);
    const int n = g.size();
    const int k = static_cast<int>(a.size());
    const int words = g.words_per_row();

    // Clique pairs are always adjacent (all contain p), so the A rows decide the
    // graph; they serve as the dedup key.
    std::map<std::vector<std::uint64_t>, NiceCandidate> unique;
    std::vector<std::uint64_t> key(static_cast<std::size_t>(k) * words);
    for_each_endpoint_order(k, [&](const std::vector<std::uint8_t>& order) {
        NiceCandidate cand{order, 0};
        for (int slot = 0; slot <= 2 * k; ++slot) {
            cand.p_slot = slot;
            // Build the full interval set, then A rows through the overlap kernel.
            std::vector<Interval> a_iv(k);
            for (std::size_t i = 0; i < order.size(); ++i) {
                const std::int64_t x = 2 * (static_cast<std::int64_t>(i) + 1);
                if (order[i] & 1u) a_iv[order[i] >> 1].r = x;
                else a_iv[order[i] >> 1].l = x;
            }
            const std::int64_t p = 2 * static_cast<std::int64_t>(slot) + 1;
            std::vector<std::int64_t> left(n), right(n);
            std::size_t ai = 0;
            for (int v = 0; v < n; ++v) {
                if (ai < a.size() && a[ai] == v) {
                    left[v] = a_iv[ai].l;
                    right[v] = a_iv[ai].r;
                    ++ai;
                    continue;
                }
                std::int64_t l = p, r = p;
                for (int i = 0; i < k; ++i)
                    if (g.adjacent(v, a[i])) {
                        l = std::min(l, a_iv[i].r);
                        r = std::max(r, a_iv[i].l);
                    }
                left[v] = l;
                right[v] = r;
            }
            bool supergraph = true;
            std::fill(key.begin(), key.end(), ~std::uint64_t{0});
            for (int i = 0; i < k && supergraph; ++i) {
                std::span<std::uint64_t> row(key.data() + static_cast<std::size_t>(i) * words, words);
                kernels::overlap_and(left, right, a_iv[i].l, a_iv[i].r, row);
                // trim bits past n and the diagonal
                if (n % 64) row[words - 1] &= (std::uint64_t{1} << (n % 64)) - 1;
                row[a[i] >> 6] &= ~(std::uint64_t{1} << (a[i] & 63));
                auto grow = g.row(a[i]);
                for (int w = 0; w < words; ++w)
                    if (grow[w] & ~row[w]) supergraph = false;
            }
            if (supergraph) unique.try_emplace(key, cand);
        }
    });

    std::vector<NiceSupergraph> out;
    out.reserve(unique.size());
    for (const auto& [row_key, cand] : unique) out.push_back(realize_nice(g, a, cand));
    return out;
}

BoxRepresentation solve_clique_remainder(const Graph& g, std::span<const int> a_in, const NiceLimits& limits) {
    const auto a = checked_remainder(g, a_in, limits);
    const int n = g.size();
    BoxRepresentation out{n, {}};
    if (g.is_complete()) return out;

    const auto supers = enumerate_nice_supergraphs(g, a, limits);
    std::vector<Edge> non_edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v)) non_edges.emplace_back(u, v);

    std::vector<CoverSet> cover;
    cover.reserve(supers.size());
    for (const auto& s : supers) {
        CoverSet c(non_edges.size());
        for (std::size_t i = 0; i < non_edges.size(); ++i)
            if (!s.graph.adjacent(non_edges[i].first, non_edges[i].second)) c.set(i);
        cover.push_back(std::move(c));
    }
    const auto keep = maximal_sets(cover);
    std::vector<CoverSet> reduced;
    reduced.reserve(keep.size());
    for (int i : keep) reduced.push_back(cover[i]);

    const auto chosen = find_min_cover(reduced, non_edges.size(), static_cast<int>(a.size()));
    if (!chosen) throw DefectError("no nice box representation with at most |A| dimensions");
    for (int i : *chosen) out.dims.push_back(supers[keep[i]].rep);
    require_verified(g, out, false, "solve_clique_remainder");
    return out;
}

}  // namespace boxrep
