#include <doctest.h>

#include <cmath>

#include "boxrep/approxbox.hpp"
#include "boxrep/errors.hpp"
#include "boxrep/exact.hpp"
#include "support/test_support.hpp"

using namespace boxrep;
using namespace boxrep::testing;

TEST_CASE("default_part_size") {
    for (int n = 1; n <= 4; ++n) CHECK(default_part_size(n) == 1);
    for (int n = 5; n <= 5000; n += 7) {
        const double l = std::log2(static_cast<double>(n));
        const int expected = std::max(1, static_cast<int>(std::floor(std::sqrt(l / std::log2(l)))));
        CHECK(default_part_size(n) == expected);
    }
    CHECK(default_part_size(16) == 1);
    CHECK(default_part_size(1 << 20) == 2);
}

TEST_CASE("approx_box examples") {
    const auto kn = approx_box(Graph::complete(6));
    CHECK(kn.rep.dimension() == 0);
    CHECK(kn.report.t == 6);

    const auto c4 = approx_box(cycle(4));
    CHECK(c4.report.k == 1);
    CHECK(c4.report.t == 4);
    CHECK(c4.report.part_dims == std::vector<int>{1, 1, 1, 1});
    CHECK(c4.rep.dimension() <= 4);
    CHECK(verify_representation(cycle(4), c4.rep).valid);

    ApproxOptions one;
    one.part_size = 1;
    const auto pet = approx_box(petersen(), one);
    CHECK(pet.rep.dimension() <= 10);
    CHECK(verify_representation(petersen(), pet.rep).valid);
}

TEST_CASE("approx_box report") {
    ApproxOptions opts;
    opts.part_size = 3;
    const auto out = approx_box(path(10), opts);
    CHECK(out.report.n == 10);
    CHECK(out.report.k == 3);
    CHECK(out.report.t == 4);
    REQUIRE(out.report.parts.size() == 4);
    CHECK(out.report.parts[0] == VertexSet{0, 1, 2});
    CHECK(out.report.parts[3] == VertexSet{9});
    int total = 0;
    for (std::size_t i = 0; i < out.report.parts.size(); ++i) {
        CHECK(out.report.part_dims[i] <= static_cast<int>(out.report.parts[i].size()));
        total += out.report.part_dims[i];
    }
    CHECK(total == out.rep.dimension());
    CHECK(out.report.dimension_before_prune == out.rep.dimension());
}

TEST_CASE("union is valid for every part size and shuffle") {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 14);
        const auto g = random_graph(n, 0.5, rng);
        ApproxOptions opts;
        opts.part_size = 1 + static_cast<int>(rng() % 3);
        if (trial % 2) opts.shuffle_seed = rng();
        const auto out = approx_box(g, opts);
        CHECK(verify_representation(g, out.rep).valid);
        CHECK(out.rep.dimension() <= out.report.t * out.report.k);
        if (n <= 7) CHECK(out.rep.dimension() <= 2 * out.report.t * boxicity(g));
    }
}

TEST_CASE("thread count does not change the output") {
    std::mt19937_64 rng(62);
    for (int trial = 0; trial < 10; ++trial) {
        const auto g = random_graph(30, 0.5, rng);
        ApproxOptions serial;
        serial.part_size = 2;
        ApproxOptions parallel = serial;
        parallel.threads = 4;
        CHECK(approx_box(g, serial).rep == approx_box(g, parallel).rep);
    }
}

TEST_CASE("prune_redundant_dims") {
    const auto c4 = approx_box(cycle(4));
    const auto pruned = prune_redundant_dims(cycle(4), c4.rep);
    CHECK(pruned.dimension() <= 4);
    CHECK(pruned.dimension() >= 2);
    CHECK(verify_representation(cycle(4), pruned).valid);
    CHECK(prune_redundant_dims(cycle(4), pruned) == pruned);

    auto padded = optimal_box_representation(cycle(4));
    const auto minimal = padded;
    IntervalRepresentation everything(4);
    for (int v = 0; v < 4; ++v) everything.set(v, {0, 1});
    padded.dims.push_back(everything);
    CHECK(prune_redundant_dims(cycle(4), padded) == minimal);

    CHECK_THROWS_AS(prune_redundant_dims(path(4), minimal), InputError);

    ApproxOptions opts;
    opts.prune = true;
    const auto auto_pruned = approx_box(cycle(4), opts);
    CHECK(auto_pruned.rep == pruned);
    CHECK(auto_pruned.report.dimension_before_prune == 4);
}

TEST_CASE("approx_box errors") {
    ApproxOptions big;
    big.part_size = 6;
    CHECK_THROWS_AS(approx_box(path(10), big), SizeGuardError);
    ApproxOptions zero;
    zero.part_size = 0;
    CHECK_THROWS_AS(approx_box(path(10), zero), InputError);
    CHECK_THROWS_AS(approx_box(Graph(0)), InputError);
}
