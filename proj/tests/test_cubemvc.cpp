#include <doctest.h>

#include <cmath>

#include "boxrep/cubemvc.hpp"
#include "boxrep/errors.hpp"
#include "boxrep/exact.hpp"
#include "support/test_support.hpp"

using namespace boxrep;
using namespace boxrep::testing;

namespace {

std::uint64_t mask_of(const VertexSet& s) {
    std::uint64_t m = 0;
    for (int v : s) m |= std::uint64_t{1} << v;
    return m;
}

}  // namespace

TEST_CASE("min_vertex_cover examples") {
    CHECK(min_vertex_cover(cycle(4), 4)->size() == 2);
    CHECK(*min_vertex_cover(star(4), 4) == VertexSet{0});
    CHECK(min_vertex_cover(Graph::complete(5), 5)->size() == 4);
    CHECK_FALSE(min_vertex_cover(Graph::complete(5), 3).has_value());
    CHECK(min_vertex_cover(Graph(3), 0)->empty());
}

TEST_CASE("min_vertex_cover matches subset enumeration") {
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 10);
        const auto g = random_graph(n, 0.35, rng);
        const int best = brute_force_mvc(g);
        const auto cover = min_vertex_cover(g, n);
        REQUIRE(cover.has_value());
        CHECK(static_cast<int>(cover->size()) == best);
        CHECK(is_vertex_cover(g, mask_of(*cover)));
        if (best > 0) CHECK_FALSE(min_vertex_cover(g, best - 1).has_value());
    }
}

TEST_CASE("compute_psi") {
    CHECK(compute_psi(star(4)) == 4);
    CHECK(compute_psi(Graph::complete(5)) == 1);
    CHECK(compute_psi(cycle(4)) == 2);
    CHECK(compute_psi(Graph(4)) == 0);
    CHECK(compute_psi(petersen()) == 3);
    std::mt19937_64 rng(72);
    for (int trial = 0; trial < 150; ++trial) {
        const auto g = random_graph(1 + static_cast<int>(rng() % 10), 0.4, rng);
        CHECK(compute_psi(g) == brute_force_psi(g));
    }
    CHECK_THROWS_AS(compute_psi(Graph(70)), SizeGuardError);
    CHECK_THROWS_AS(compute_psi(Graph(10), PsiLimits{5}), SizeGuardError);
}

TEST_CASE("classify_neighborhoods") {
    const auto c = classify_neighborhoods(cycle(4), std::vector<int>{0, 2});
    REQUIRE(c.classes.size() == 1);
    CHECK(c.classes[0].neighbors == VertexSet{0, 2});
    CHECK(c.classes[0].members == VertexSet{1, 3});
    CHECK(c.classes[0].representative() == 1);
    CHECK(c.max_class_size == 2);
    CHECK(c.class_of == std::vector<int>{-1, 0, -1, 0});
    CHECK(c.code_of == std::vector<int>{-1, 0, -1, 1});

    CHECK_THROWS_WITH_AS(classify_neighborhoods(cycle(4), std::vector<int>{0}), doctest::Contains("(1,2)"),
                         InputError);

    const auto all = classify_neighborhoods(cycle(4), std::vector<int>{0, 1, 2, 3});
    CHECK(all.classes.empty());
    CHECK(all.max_class_size == 0);
}

TEST_CASE("classes partition the non-cover vertices by neighborhood") {
    std::mt19937_64 rng(73);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 12);
        const auto g = random_graph(n, 0.3, rng);
        const auto cover = *min_vertex_cover(g, n);
        const auto c = classify_neighborhoods(g, cover);
        std::vector<int> seen(n, 0);
        for (const auto& cls : c.classes)
            for (int v : cls.members) {
                ++seen[v];
                CHECK(g.neighbors(v) == cls.neighbors);
            }
        for (int v = 0; v < n; ++v)
            CHECK(seen[v] == (std::binary_search(cover.begin(), cover.end(), v) ? 0 : 1));
    }
}

TEST_CASE("code_bits") {
    CHECK(code_bits(0) == 0);
    CHECK(code_bits(1) == 0);
    CHECK(code_bits(2) == 1);
    CHECK(code_bits(4) == 2);
    CHECK(code_bits(5) == 3);
    CHECK(code_bits(8) == 3);
    CHECK(code_bits(9) == 4);
}

TEST_CASE("cube_rep_mvc examples") {
    const auto k2 = cube_rep_mvc(Graph::complete(2), std::vector<int>{0});
    CHECK(k2.report.t == 1);
    CHECK(k2.report.q == 0);
    CHECK(k2.rep.dimension() == 0);

    const auto c4 = cube_rep_mvc(cycle(4), std::vector<int>{0, 2});
    CHECK(c4.report.t == 2);
    CHECK(c4.report.q == 1);
    CHECK(c4.report.p == 1);
    CHECK(c4.report.core_vertices == 3);
    CHECK(c4.rep.dimension() == 2);
    CHECK(verify_representation(cycle(4), c4.rep, true).valid);

    const auto k14 = cube_rep_mvc(star(4), std::vector<int>{0});
    CHECK(k14.report.t == 4);
    CHECK(k14.report.q == 2);
    CHECK(k14.report.p == 0);
    CHECK(k14.rep.dimension() == 2);
    CHECK(k14.rep.dimension() == ceil_log2(compute_psi(star(4))));

    Graph two_k2(4);
    two_k2.add_edge(0, 1);
    two_k2.add_edge(2, 3);
    const auto dis = cube_rep_mvc(two_k2, std::vector<int>{0, 2});
    CHECK_FALSE(dis.report.connected);
    CHECK(verify_representation(two_k2, dis.rep, true).valid);
}

TEST_CASE("code dimensions separate each class") {
    std::mt19937_64 rng(74);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 10);
        Graph g(n);
        const int k = 1 + static_cast<int>(rng() % 2);
        for (int v = k; v < n; ++v) {
            g.add_edge(static_cast<int>(rng() % k), v);
            if (rng() % 3 == 0) g.add_edge(static_cast<int>(rng() % k), v);
        }
        VertexSet cover;
        for (int v = 0; v < k; ++v) cover.push_back(v);
        const auto c = classify_neighborhoods(g, cover);
        const auto out = cube_rep_mvc(g, cover);
        REQUIRE(verify_representation(g, out.rep, true).valid);
        const int p = out.report.p;
        REQUIRE(out.rep.dimension() == p + out.report.q);
        for (int d = p; d < out.rep.dimension(); ++d) {
            const auto& j = out.rep.dims[d];
            CHECK(g.is_subgraph_of(interval_graph(j)));
            for (int s : cover) CHECK(j[s] == Interval{1, 2});
        }
        for (const auto& cls : c.classes)
            for (std::size_t a = 0; a < cls.members.size(); ++a)
                for (std::size_t b = a + 1; b < cls.members.size(); ++b) {
                    bool separated = false;
                    const int u = cls.members[a], v = cls.members[b];
                    for (int d = p; d < out.rep.dimension(); ++d) {
                        const auto iu = out.rep.dims[d][u], iv = out.rep.dims[d][v];
                        if (iu.r < iv.l || iv.r < iu.l) separated = true;
                    }
                    CHECK(separated);
                }
    }
}

TEST_CASE("cube_rep_mvc stays within twice the cubicity on connected graphs") {
    std::mt19937_64 rng(75);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 5);
        const auto g = random_graph(n, 0.5, rng);
        if (!is_connected(g)) continue;
        const auto cover = *min_vertex_cover(g, n);
        const auto out = cube_rep_mvc(g, cover);
        CHECK(verify_representation(g, out.rep, true).valid);
        const int cub = cubicity(g);
        CHECK(out.rep.dimension() <= 2 * cub);
        CHECK(out.report.q <= ceil_log2(std::max(1, compute_psi(g))));
    }
}

TEST_CASE("stars") {
    for (int m = 2; m <= 8; ++m) {
        const auto out = cube_rep_mvc(star(m), std::vector<int>{0});
        CHECK(out.report.p == 0);
        CHECK(out.rep.dimension() == ceil_log2(m));
    }
}

TEST_CASE("eps variant") {
    CHECK(eps_threshold(1, 1.0) == doctest::Approx(3.0));
    CHECK(eps_threshold(2, 1.0) == doctest::Approx(18.0));
    CHECK(eps_threshold(1, 0.5) == doctest::Approx(5.0));

    const auto p3 = cube_rep_mvc_eps(path(3), std::vector<int>{1}, 1.0);
    CHECK(p3.report.oracle_path);
    CHECK(p3.rep.dimension() == 1);
    CHECK_FALSE(p3.report.construction.has_value());

    const auto k18 = cube_rep_mvc_eps(star(8), std::vector<int>{0}, 1.0);
    CHECK_FALSE(k18.report.oracle_path);
    CHECK(k18.rep.dimension() == 3);
    REQUIRE(k18.report.construction.has_value());
    CHECK(k18.report.construction->q == 3);
    CHECK(verify_representation(star(8), k18.rep, true).valid);

    for (double eps : {0.1, 1.0, 100.0})
        CHECK(cube_rep_mvc_eps(Graph::complete(2), std::vector<int>{0}, eps).rep.dimension() == 0);

    try {
        cube_rep_mvc_eps(star(9), std::vector<int>{0}, 0.25);
        FAIL("expected a size guard");
    } catch (const SizeGuardError& e) {
        CHECK(std::string(e.what()).find("f(k_eps)") != std::string::npos);
    }
    CHECK_THROWS_AS(cube_rep_mvc_eps(path(3), std::vector<int>{1}, 0.0), InputError);
    CHECK_THROWS_AS(cube_rep_mvc_eps(path(3), std::vector<int>{0}, 1.0), InputError);
}
