#include "boxrep/cubemvc.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>

#include "boxrep/errors.hpp"

namespace boxrep {

namespace {

class CoverBranching {
public:
    explicit CoverBranching(const Graph& g) : g_(g), removed_(g.size(), 0) {}

    bool search(int budget) {
        int best = -1, best_deg = 0;
        for (int v = 0; v < g_.size(); ++v) {
            if (removed_[v]) continue;
            int d = live_degree(v);
            if (d > best_deg) {
                best = v;
                best_deg = d;
            }
        }
        if (best < 0) return true;
        if (budget <= 0) return false;

        take({best});
        if (search(budget - 1)) return true;
        untake(1);

        if (best_deg <= budget) {
            std::vector<int> nbrs;
            for (int u : g_.neighbors(best))
                if (!removed_[u]) nbrs.push_back(u);
            take(nbrs);
            if (search(budget - best_deg)) return true;
            untake(nbrs.size());
        }
        return false;
    }

    VertexSet cover() const {
        VertexSet out = chosen_;
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    int live_degree(int v) const {
        int d = 0;
        for (int u : g_.neighbors(v)) d += !removed_[u];
        return d;
    }
    void take(const std::vector<int>& vs) {
        for (int v : vs) {
            removed_[v] = 1;
            chosen_.push_back(v);
        }
    }
    void untake(std::size_t count) {
        for (std::size_t i = 0; i < count; ++i) {
            removed_[chosen_.back()] = 0;
            chosen_.pop_back();
        }
    }

    const Graph& g_;
    std::vector<char> removed_;
    std::vector<int> chosen_;
};

int independence_number(std::uint64_t candidates, const std::vector<std::uint64_t>& adj, int best_so_far,
                        int taken) {
    if (candidates == 0) return taken;
    if (taken + std::popcount(candidates) <= best_so_far) return best_so_far;
    int pick = -1, pick_deg = -1;
    for (auto c = candidates; c; c &= c - 1) {
        const int v = std::countr_zero(c);
        const int d = std::popcount(adj[v] & candidates);
        if (d > pick_deg) {
            pick = v;
            pick_deg = d;
        }
    }
    if (pick_deg == 0) return std::max(best_so_far, taken + std::popcount(candidates));
    const std::uint64_t bit = std::uint64_t{1} << pick;
    // take pick
    best_so_far = std::max(best_so_far, independence_number(candidates & ~bit & ~adj[pick], adj, best_so_far, taken + 1));
    // skip pick
    return std::max(best_so_far, independence_number(candidates & ~bit, adj, best_so_far, taken));
}

}  // namespace

std::optional<VertexSet> min_vertex_cover(const Graph& g, int k_max) {
    for (int k = 0; k <= k_max; ++k) {
        CoverBranching search(g);
        if (search.search(k)) return search.cover();
    }
    return std::nullopt;
}

int compute_psi(const Graph& g, const PsiLimits& limits) {
    if (g.size() > std::min(limits.max_vertices, 64))
        throw SizeGuardError("psi vertices", g.size(), std::min(limits.max_vertices, 64));
    int best = 0;
    for (int v = 0; v < g.size(); ++v) {
        const auto nbrs = g.neighbors(v);
        if (static_cast<int>(nbrs.size()) <= best) continue;
        std::vector<std::uint64_t> adj(nbrs.size(), 0);
        for (std::size_t i = 0; i < nbrs.size(); ++i)
            for (std::size_t j = 0; j < nbrs.size(); ++j)
                if (i != j && g.adjacent(nbrs[i], nbrs[j])) adj[i] |= std::uint64_t{1} << j;
        const std::uint64_t all = nbrs.size() == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << nbrs.size()) - 1);
        best = std::max(best, independence_number(all, adj, best, 0));
    }
    return best;
}

NeighborhoodClassing classify_neighborhoods(const Graph& g, std::span<const int> cover_in) {
    const auto cover = normalize_vertex_set(g.size(), cover_in);
    std::vector<char> in_cover(g.size(), 0);
    for (int v : cover) in_cover[v] = 1;
    for (const auto& [u, v] : g.edges())
        if (!in_cover[u] && !in_cover[v]) throw InputError("vertex set is not a cover: edge " + format_edge({u, v}) + " is uncovered");

    std::map<VertexSet, VertexSet> groups;
    for (int v = 0; v < g.size(); ++v)
        if (!in_cover[v]) groups[g.neighbors(v)].push_back(v);

    NeighborhoodClassing out;
    out.class_of.assign(g.size(), -1);
    out.code_of.assign(g.size(), -1);
    for (auto& [nbrs, members] : groups) {
        const int index = static_cast<int>(out.classes.size());
        for (std::size_t i = 0; i < members.size(); ++i) {
            out.class_of[members[i]] = index;
            out.code_of[members[i]] = static_cast<int>(i);
        }
        out.max_class_size = std::max(out.max_class_size, static_cast<int>(members.size()));
        out.classes.push_back({nbrs, std::move(members)});
    }
    return out;
}

int code_bits(int t) {
    if (t <= 1) return 0;
    return std::bit_width(static_cast<unsigned>(t - 1));
}

CubeMvcResult cube_rep_mvc(const Graph& g, std::span<const int> cover_in, const ExactLimits& limits) {
    const auto cover = normalize_vertex_set(g.size(), cover_in);
    const auto classing = classify_neighborhoods(g, cover);

    VertexSet core = cover;
    for (const auto& c : classing.classes) core.push_back(c.representative());
    std::sort(core.begin(), core.end());
    const auto sub = induced_subgraph(g, core);
    const auto core_rep = optimal_cube_representation(sub.graph, limits);

    std::vector<int> core_index(g.size(), -1);
    for (std::size_t i = 0; i < core.size(); ++i) core_index[core[i]] = static_cast<int>(i);

    CubeMvcResult result;
    auto& report = result.report;
    report.p = core_rep.dimension();
    report.t = classing.max_class_size;
    report.q = code_bits(report.t);
    report.core_vertices = static_cast<int>(core.size());
    report.connected = is_connected(g);

    result.rep = BoxRepresentation{g.size(), {}};
    for (const auto& dim : core_rep.dims) {
        IntervalRepresentation lifted(g.size());
        for (int v = 0; v < g.size(); ++v) {
            const int source = classing.class_of[v] >= 0 ? classing.classes[classing.class_of[v]].representative() : v;
            lifted.set(v, dim[core_index[source]]);
        }
        result.rep.dims.push_back(std::move(lifted));
    }
    for (int bit = 0; bit < report.q; ++bit) {
        IntervalRepresentation codes(g.size());
        for (int v = 0; v < g.size(); ++v) {
            if (classing.class_of[v] < 0) codes.set(v, {1, 2});
            else if ((classing.code_of[v] >> bit) & 1) codes.set(v, {2, 3});
            else codes.set(v, {0, 1});
        }
        result.rep.dims.push_back(std::move(codes));
    }
    require_verified(g, result.rep, true, "cube_rep_mvc");
    return result;
}

double eps_threshold(int k, double eps) {
    return k * (1.0 + std::exp2((2.0 * k - 1.0) / eps));
}

CubeEpsResult cube_rep_mvc_eps(const Graph& g, std::span<const int> cover_in, double eps, const ExactLimits& limits) {
    if (!(eps > 0) || !std::isfinite(eps)) throw InputError("eps must be a positive number");
    const auto cover = normalize_vertex_set(g.size(), cover_in);
    classify_neighborhoods(g, cover);  // validates the cover

    CubeEpsResult result;
    result.report.k = static_cast<int>(cover.size());
    result.report.threshold = eps_threshold(result.report.k, eps);
    if (g.size() <= result.report.threshold) {
        result.report.oracle_path = true;
        try {
            result.rep = optimal_cube_representation(g, limits);
        } catch (const SizeGuardError& e) {
            throw SizeGuardError("exact-cube vertices on the n <= f(k_eps) = " + std::to_string(result.report.threshold) +
                                     " path",
                                 e.value(), e.limit());
        }
    } else {
        auto built = cube_rep_mvc(g, cover, limits);
        result.rep = std::move(built.rep);
        result.report.construction = built.report;
    }
    return result;
}

}  // namespace boxrep
