#include "boxrep/approxbox.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <numeric>
#include <random>
#include <thread>

#include "boxrep/errors.hpp"

namespace boxrep {

int default_part_size(int n) {
    if (n <= 4) return 1;
    const double lg = std::log2(static_cast<double>(n));
    const double k = std::floor(std::sqrt(lg / std::log2(lg)));
    return std::max(1, static_cast<int>(k));
}

int formula_part_count(int n) {
    if (n < 4) return n;
    const double lg = std::log2(static_cast<double>(n));
    return static_cast<int>(std::ceil(n * std::sqrt(std::log2(lg)) / std::sqrt(lg)));
}

ApproxResult approx_box(const Graph& g, const ApproxOptions& options) {
    const int n = g.size();
    if (n < 1) throw InputError("approx_box needs at least one vertex");
    const int k = options.part_size.value_or(default_part_size(n));
    if (k < 1) throw InputError("part size must be positive, got " + std::to_string(k));
    if (k > options.limits.max_remainder)
        throw SizeGuardError("part size k", k, options.limits.max_remainder);

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    if (options.shuffle_seed) {
        std::mt19937_64 rng(*options.shuffle_seed);
        std::shuffle(order.begin(), order.end(), rng);
    }

    ApproxResult result;
    auto& report = result.report;
    report.n = n;
    report.k = k;
    report.t = (n + k - 1) / k;
    report.t_formula = formula_part_count(n);
    for (int i = 0; i < report.t; ++i) {
        VertexSet part(order.begin() + i * k, order.begin() + std::min(n, (i + 1) * k));
        std::sort(part.begin(), part.end());
        report.parts.push_back(std::move(part));
    }

    std::vector<BoxRepresentation> solved(report.t);
    std::vector<std::exception_ptr> errors(report.t);
    std::atomic<int> next{0};
    auto worker = [&] {
        for (int i = next++; i < report.t; i = next++) {
            try {
                const auto& part = report.parts[i];
                solved[i] = solve_clique_remainder(clique_complete(g, complement_set(n, part)), part, options.limits);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const int threads = std::clamp(options.threads, 1, report.t);
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);

    result.rep = BoxRepresentation{n, {}};
    for (const auto& part_rep : solved) {
        report.part_dims.push_back(part_rep.dimension());
        result.rep = concat(result.rep, part_rep);
    }
    report.dimension_before_prune = result.rep.dimension();
    require_verified(g, result.rep, false, "approx_box");
    if (options.prune) result.rep = prune_redundant_dims(g, result.rep);
    return result;
}

BoxRepresentation prune_redundant_dims(const Graph& g, const BoxRepresentation& rep) {
    if (auto check = verify_representation(g, rep); !check.valid)
        throw InputError("cannot prune an invalid representation: " + describe(check));
    BoxRepresentation current = rep;
    for (int i = 0; i < current.dimension();) {
        BoxRepresentation candidate = current;
        candidate.dims.erase(candidate.dims.begin() + i);
        if (intersection_graph(candidate) == g) current = std::move(candidate);
        else ++i;
    }
    return current;
}

}  // namespace boxrep
