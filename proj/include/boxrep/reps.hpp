#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "boxrep/graph.hpp"

namespace boxrep {

/// Closed interval with integer endpoints. Touching endpoints intersect.
struct Interval {
    std::int64_t l = 0;
    std::int64_t r = 0;
    friend bool operator==(const Interval&, const Interval&) = default;
};

/// One interval per vertex; stored as two coordinate arrays so the overlap
/// kernels can stream them.
class IntervalRepresentation {
public:
    IntervalRepresentation() = default;
    explicit IntervalRepresentation(int n) : left_(n, 0), right_(n, 0) {}
    explicit IntervalRepresentation(std::span<const Interval> intervals);

    int size() const noexcept { return static_cast<int>(left_.size()); }
    Interval operator[](int v) const noexcept { return {left_[v], right_[v]}; }
    void set(int v, Interval iv) noexcept {
        left_[v] = iv.l;
        right_[v] = iv.r;
    }
    std::span<const std::int64_t> left() const noexcept { return left_; }
    std::span<const std::int64_t> right() const noexcept { return right_; }

    std::int64_t min_left() const noexcept;
    std::int64_t max_right() const noexcept;

    friend bool operator==(const IntervalRepresentation&, const IntervalRepresentation&) = default;

private:
    std::vector<std::int64_t> left_;
    std::vector<std::int64_t> right_;
};

/// Ordered list of interval representations over vertices 0..n-1. No
/// dimensions means the complete graph K_n. A cube representation is the same
/// value with equal interval lengths inside every dimension.
struct BoxRepresentation {
    int n = 0;
    std::vector<IntervalRepresentation> dims;

    int dimension() const noexcept { return static_cast<int>(dims.size()); }
    friend bool operator==(const BoxRepresentation&, const BoxRepresentation&) = default;
};

BoxRepresentation concat(const BoxRepresentation& a, const BoxRepresentation& b);

Graph interval_graph(const IntervalRepresentation& rep);
Graph intersection_graph(const BoxRepresentation& rep);

struct Verification {
    bool valid = true;
    /// Smallest pair (u < v) present in exactly one of G and the represented graph.
    std::optional<Edge> witness;
    /// True when the witness is an edge of G that the representation misses.
    bool witness_in_graph = false;
    /// Offending dimension for malformed intervals or cube-shape violations.
    std::optional<int> dimension;
    std::string reason;
};

Verification verify_representation(const Graph& g, const BoxRepresentation& rep, bool require_cube = false);

/// Throws DefectError when a construction fails to verify.
void require_verified(const Graph& g, const BoxRepresentation& rep, bool require_cube, const std::string& context);

/// Lifts a representation of G[S] to G when every vertex outside S is
/// universal: each outside vertex gets the span [min l, max r] of S per
/// dimension. Dimension is preserved exactly.
BoxRepresentation extend_universal(const Graph& g, std::span<const int> s, const BoxRepresentation& rep_of_s);

/// Representation of clique_complete(g, A) with twice the dimensions: every
/// dimension is emitted twice, once with the A-vertices' left ends pulled to
/// the dimension minimum and once with their right ends pushed to the maximum.
BoxRepresentation clique_double(const Graph& g, std::span<const int> a, const BoxRepresentation& rep);

std::string describe(const Verification& v);

}  // namespace boxrep
