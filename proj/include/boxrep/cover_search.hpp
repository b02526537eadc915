#pragma once

// Minimum-cardinality cover search shared by the exact and nice solvers.
//
// A family of supergraphs H_1..H_m of G intersects to G exactly when the
// non-edges each H_i lacks together cover every non-edge of G, so "fewest
// supergraphs whose intersection is G" is a set cover over non-edges of G.

#include <cstdint>
#include <optional>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace boxrep {

using CoverSet = boost::dynamic_bitset<std::uint64_t>;

/// Indices (ascending) of the sets not strictly contained in another set.
/// Among equal sets the lowest index survives.
std::vector<int> maximal_sets(const std::vector<CoverSet>& sets);

/// Smallest collection of at most max_size sets whose union is the whole
/// universe, as ascending indices; nullopt if none exists within max_size.
/// An empty universe yields an empty collection. Deterministic: branches on
/// the uncovered element with the fewest covering sets, candidates ascending.
std::optional<std::vector<int>> find_min_cover(const std::vector<CoverSet>& sets, std::size_t universe,
                                               int max_size);

}  // namespace boxrep
