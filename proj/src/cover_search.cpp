#include "boxrep/cover_search.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace boxrep {

namespace {

constexpr std::size_t kDenseUniverseBits = 22;

std::vector<int> maximal_sets_dense(const std::vector<CoverSet>& sets, std::size_t universe) {
    const std::size_t size = std::size_t{1} << universe;
    std::vector<char> present(size, 0);
    std::vector<int> first_index(size, -1);
    for (std::size_t i = 0; i < sets.size(); ++i) {
        const auto mask = static_cast<std::size_t>(sets[i].to_ulong());
        present[mask] = 1;
        if (first_index[mask] < 0) first_index[mask] = static_cast<int>(i);
    }
    // superset-or-self presence
    std::vector<char> up = present;
    for (std::size_t bit = 0; bit < universe; ++bit) {
        const std::size_t b = std::size_t{1} << bit;
        for (std::size_t mask = 0; mask < size; ++mask)
            if (!(mask & b) && up[mask | b]) up[mask] = 1;
    }
    std::vector<int> out;
    for (std::size_t mask = 0; mask < size; ++mask) {
        if (!present[mask]) continue;
        bool dominated = false;
        for (std::size_t bit = 0; bit < universe && !dominated; ++bit) {
            const std::size_t b = std::size_t{1} << bit;
            if (!(mask & b) && up[mask | b]) dominated = true;
        }
        if (!dominated) out.push_back(first_index[mask]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

struct Search {
    const std::vector<CoverSet>& sets;
    std::vector<std::vector<int>> covering;  // element -> sets containing it
    std::size_t max_count = 0;
    std::vector<int> chosen;

    bool run(const CoverSet& covered, int depth_left) {
        const std::size_t missing = covered.size() - covered.count();
        if (missing == 0) return true;
        if (depth_left == 0) return false;
        if (missing > max_count * static_cast<std::size_t>(depth_left)) return false;

        const CoverSet uncovered = ~covered;
        std::size_t pick = CoverSet::npos;
        for (auto e = uncovered.find_first(); e != CoverSet::npos; e = uncovered.find_next(e)) {
            if (pick == CoverSet::npos || covering[e].size() < covering[pick].size()) pick = e;
        }
        if (covering[pick].empty()) return false;

        for (int c : covering[pick]) {
            if (depth_left == 1 && !uncovered.is_subset_of(sets[c])) continue;
            chosen.push_back(c);
            if (run(covered | sets[c], depth_left - 1)) return true;
            chosen.pop_back();
        }
        return false;
    }
};

}  // namespace

std::vector<int> maximal_sets(const std::vector<CoverSet>& sets) {
    if (sets.empty()) return {};
    const std::size_t universe = sets.front().size();
    if (universe <= kDenseUniverseBits) {
        const double dense_cost = std::ldexp(static_cast<double>(universe + 1), static_cast<int>(universe));
        const double pairwise_cost = static_cast<double>(sets.size()) * static_cast<double>(sets.size());
        if (dense_cost <= pairwise_cost) return maximal_sets_dense(sets, universe);
    }

    std::vector<int> order(sets.size());
    std::iota(order.begin(), order.end(), 0);
    std::vector<std::size_t> counts(sets.size());
    for (std::size_t i = 0; i < sets.size(); ++i) counts[i] = sets[i].count();
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return counts[a] > counts[b]; });
    std::vector<int> kept;
    for (int i : order) {
        bool dominated = false;
        for (int k : kept)
            if (sets[i].is_subset_of(sets[k])) {
                dominated = true;
                break;
            }
        if (!dominated) kept.push_back(i);
    }
    std::sort(kept.begin(), kept.end());
    return kept;
}

std::optional<std::vector<int>> find_min_cover(const std::vector<CoverSet>& sets, std::size_t universe,
                                               int max_size) {
    if (universe == 0) return std::vector<int>{};
    Search search{sets, std::vector<std::vector<int>>(universe), 0, {}};
    for (std::size_t i = 0; i < sets.size(); ++i) {
        search.max_count = std::max(search.max_count, sets[i].count());
        for (auto e = sets[i].find_first(); e != CoverSet::npos; e = sets[i].find_next(e))
            search.covering[e].push_back(static_cast<int>(i));
    }
    const CoverSet none(universe);
    for (int d = 1; d <= max_size; ++d) {
        search.chosen.clear();
        if (search.run(none, d)) {
            auto out = search.chosen;
            std::sort(out.begin(), out.end());
            return out;
        }
    }
    return std::nullopt;
}

}  // namespace boxrep
