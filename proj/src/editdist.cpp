#include "boxrep/editdist.hpp"

#include <algorithm>

#include "boxrep/errors.hpp"

namespace boxrep {

namespace {

void check_pair(const Graph& g, const Edge& e, const char* kind) {
    const auto [u, v] = e;
    if (u < 0 || v < 0 || u >= g.size() || v >= g.size())
        throw InputError(std::string(kind) + " pair " + format_edge(e) + " has a vertex outside the graph");
    if (u == v) throw InputError(std::string(kind) + " pair " + format_edge(e) + " is a self-loop");
}

}  // namespace

Graph edge_modulator_base(const Graph& g, const EdgeModulator& m) {
    Graph base = g;
    for (const auto& e : m.added) {
        check_pair(g, e, "added");
        if (!g.adjacent(e.first, e.second))
            throw InputError("added pair " + format_edge(e) + " is not an edge of the graph");
    }
    for (const auto& e : m.deleted) {
        check_pair(g, e, "deleted");
        if (g.adjacent(e.first, e.second))
            throw InputError("deleted pair " + format_edge(e) + " is an edge of the graph");
    }
    for (const auto& e : m.added) base.remove_edge(e.first, e.second);
    for (const auto& e : m.deleted) base.add_edge(e.first, e.second);
    return base;
}

VertexSet edge_modulator_span(const Graph& g, const EdgeModulator& m) {
    std::vector<int> ends;
    for (const auto* list : {&m.added, &m.deleted})
        for (const auto& [u, v] : *list) {
            ends.push_back(u);
            ends.push_back(v);
        }
    return normalize_vertex_set(g.size(), ends);
}

SplitRepresentation box_rep_fkv(const Graph& g, const VertexModulator& s, const BoxRepresentation& base,
                                const NiceLimits& limits) {
    const auto mod = normalize_vertex_set(g.size(), s.vertices);
    if (static_cast<int>(mod.size()) > limits.max_remainder)
        throw SizeGuardError("vertex modulator size", static_cast<long long>(mod.size()), limits.max_remainder);
    const auto rest = complement_set(g.size(), mod);
    const auto base_graph = induced_subgraph(g, rest);
    if (base.n != base_graph.graph.size())
        throw InputError("base representation has " + std::to_string(base.n) + " vertices, G - S has " +
                         std::to_string(base_graph.graph.size()));
    if (auto check = verify_representation(base_graph.graph, base, false); !check.valid)
        throw InputError("base representation does not represent G - S: " + describe(check));

    SplitRepresentation out;
    out.first = solve_clique_remainder(clique_complete(g, rest), mod, limits);
    out.second = extend_universal(make_universal(g, mod), rest, base);
    out.rep = concat(out.first, out.second);
    require_verified(g, out.rep, false, "box_rep_fkv");
    return out;
}

SplitRepresentation box_rep_fke(const Graph& g, const EdgeModulator& m, const BoxRepresentation& base,
                                const ExactLimits& limits) {
    const Graph base_graph = edge_modulator_base(g, m);
    if (auto check = verify_representation(base_graph, base, false); !check.valid)
        throw InputError("base representation does not represent the modulated graph: " + describe(check));
    const auto span = edge_modulator_span(g, m);
    if (static_cast<int>(span.size()) > std::min(limits.max_box_vertices, kExactHardCap))
        throw SizeGuardError("modulator endpoints |S|", static_cast<long long>(span.size()),
                             std::min(limits.max_box_vertices, kExactHardCap));

    SplitRepresentation out;
    out.first = clique_double(base_graph, span, base);
    const auto sub = induced_subgraph(g, span);
    const auto rep_of_s = optimal_box_representation(sub.graph, limits);
    out.second = extend_universal(make_universal(g, complement_set(g.size(), span)), span, rep_of_s);
    out.rep = concat(out.first, out.second);
    require_verified(g, out.rep, false, "box_rep_fke");
    return out;
}

}  // namespace boxrep
