#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "boxrep/cli.hpp"
#include "boxrep/errors.hpp"
#include "boxrep/exact.hpp"
#include "boxrep/io.hpp"
#include "support/test_support.hpp"

using namespace boxrep;
using namespace boxrep::testing;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("boxrep_cli_" + std::to_string(std::random_device{}()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string write(const std::string& name, const std::string& text) const {
        std::ofstream(path / name) << text;
        return (path / name).string();
    }
};

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

Graph parse(const std::string& text) {
    std::istringstream in(text);
    return io::parse_graph(in, "mem");
}

}  // namespace

TEST_CASE("graph files") {
    CHECK(parse("4 4\n0 1\n1 2\n2 3\n3 0\n") == cycle(4));
    CHECK(parse("# comment\n3 1\n\n# more\n0 2\n").edges() == std::vector<Edge>{{0, 2}});
    CHECK(parse(io::format_graph(petersen())) == petersen());
    CHECK_THROWS_WITH_AS(parse("3 2\n0 1\n"), doctest::Contains("mem"), InputError);
    CHECK_THROWS_WITH_AS(parse("3 1\n0 5\n"), doctest::Contains("mem:2"), InputError);
    CHECK_THROWS_WITH_AS(parse("3 1\n1 1\n"), doctest::Contains("mem:2"), InputError);
    CHECK_THROWS_AS(parse("3 1\n0 x\n"), InputError);
    CHECK_THROWS_AS(parse(""), InputError);
    CHECK_THROWS_AS(parse("3\n"), InputError);
    CHECK_THROWS_AS(io::read_graph("/nonexistent/graph.g"), InputError);
}

TEST_CASE("representation files") {
    const auto text = R"({"n": 3, "cube": false, "dims": [{"0": [1, 2], "1": [2, 3], "2": [4, 5]}]})";
    const auto file = io::parse_representation(text, "mem");
    CHECK(file.rep.n == 3);
    CHECK_FALSE(file.cube);
    REQUIRE(file.rep.dimension() == 1);
    CHECK(file.rep.dims[0][2] == Interval{4, 5});
    CHECK(io::format_representation(file) ==
          "{\n  \"n\": 3,\n  \"cube\": false,\n  \"dims\": [\n    {\"0\": [1, 2], \"1\": [2, 3], \"2\": [4, 5]}\n  ]\n}\n");
    CHECK(io::format_representation({BoxRepresentation{2, {}}, true}) ==
          "{\n  \"n\": 2,\n  \"cube\": true,\n  \"dims\": []\n}\n");

    CHECK_THROWS_AS(io::parse_representation("{", "mem"), InputError);
    CHECK_THROWS_AS(io::parse_representation(R"({"n": 2, "cube": false, "dims": [{"0": [1, 2]}]})", "mem"),
                    InputError);
    CHECK_THROWS_AS(io::parse_representation(R"({"n": 1, "cube": false, "dims": [{"0": [3, 2]}]})", "mem"),
                    InputError);
    CHECK_THROWS_AS(io::parse_representation(R"({"n": 1, "cube": false, "dims": [{"0": [1.5, 2]}]})", "mem"),
                    InputError);
    CHECK_THROWS_AS(io::parse_representation(R"({"n": 1, "dims": [{"0": [1, 2], "7": [1, 1]}]})", "mem"),
                    InputError);
}

TEST_CASE("representation round trip") {
    std::mt19937_64 rng(81);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = static_cast<int>(rng() % 15);
        const io::RepresentationFile file{random_box(n, static_cast<int>(rng() % 4), rng), trial % 2 == 0};
        const auto text = io::format_representation(file);
        CHECK(io::parse_representation(text, "mem") == file);
    }
}

TEST_CASE("modulator files") {
    std::istringstream vertex("0 3 5\n");
    const auto v = io::parse_modulator(vertex, "mem");
    REQUIRE(std::holds_alternative<VertexModulator>(v));
    CHECK(std::get<VertexModulator>(v).vertices == VertexSet{0, 3, 5});

    std::istringstream edges("0 1 added\n# note\n2 3 deleted\n4 5 added\n");
    const auto e = io::parse_modulator(edges, "mem");
    REQUIRE(std::holds_alternative<EdgeModulator>(e));
    CHECK(std::get<EdgeModulator>(e).added == std::vector<Edge>{{0, 1}, {4, 5}});
    CHECK(std::get<EdgeModulator>(e).deleted == std::vector<Edge>{{2, 3}});

    std::istringstream bad("0 1 removed\n");
    CHECK_THROWS_WITH_AS(io::parse_modulator(bad, "mem"), doctest::Contains("mem:1"), InputError);
}

TEST_CASE("limit overrides") {
    cli::Limits limits;
    cli::apply_limit_overrides(limits, "exact_box=8,nice=4");
    CHECK(limits.exact.max_box_vertices == 8);
    CHECK(limits.nice.max_remainder == 4);
    cli::apply_limit_overrides(limits, "exact_cube=5,psi=20");
    CHECK(limits.exact.max_cube_vertices == 5);
    CHECK(limits.psi.max_vertices == 20);
    CHECK_THROWS_AS(cli::apply_limit_overrides(limits, "bogus=1"), InputError);
    CHECK_THROWS_AS(cli::apply_limit_overrides(limits, "nice=x"), InputError);
}

TEST_CASE("cli exit codes") {
    TempDir dir;
    const auto c4 = dir.write("c4.g", "4 4\n0 1\n1 2\n2 3\n3 0\n");
    std::string k20_text = "20 190\n";
    for (const auto& [u, v] : all_pairs(20)) k20_text += std::to_string(u) + " " + std::to_string(v) + "\n";
    const auto k20 = dir.write("k20.g", k20_text);

    const auto box = run({"exact-box", "--graph", c4});
    CHECK(box.code == cli::kOk);
    const auto file = io::parse_representation(box.out, "stdout");
    CHECK(file.rep.dimension() == 2);
    CHECK(verify_representation(cycle(4), file.rep).valid);

    const auto guard = run({"exact-box", "--graph", k20});
    CHECK(guard.code == cli::kSizeGuard);
    CHECK(guard.err.find("7") != std::string::npos);
    CHECK(run({"exact-box", "--graph", k20, "--limit", "exact_box=20"}).code == cli::kSizeGuard);

    CHECK(run({"exact-box", "--graph", dir.write("bad.g", "4 2\n0 1\n")}).code == cli::kInputError);
    CHECK(run({"exact-box", "--graph", (dir.path / "missing.g").string()}).code == cli::kInputError);
    CHECK(run({"no-such-command"}).code == cli::kInputError);
    CHECK(run({"exact-box", "--bogus"}).code == cli::kInputError);
}

TEST_CASE("cli verify") {
    TempDir dir;
    const auto c4 = dir.write("c4.g", "4 4\n0 1\n1 2\n2 3\n3 0\n");
    const auto bad = dir.write("bad.rep", R"({"n": 4, "cube": false, "dims": [{"0": [1, 2], "1": [2, 5], "2": [4, 5], "3": [2, 4]}]})");
    const auto result = run({"verify", "--graph", c4, "--rep", bad});
    CHECK(result.code == cli::kOk);
    CHECK(result.out.find("valid: false") != std::string::npos);
    CHECK(result.out.find("witness: (1,3)") != std::string::npos);

    const auto good_path = (dir.path / "good.rep").string();
    REQUIRE(run({"exact-box", "--graph", c4, "--out", good_path}).code == cli::kOk);
    const auto good = run({"verify", "--graph", c4, "--rep", good_path});
    CHECK(good.code == cli::kOk);
    CHECK(good.out.find("valid: true") != std::string::npos);
    CHECK(good.out.find("dimension: 2") != std::string::npos);
}

TEST_CASE("cli pipelines") {
    TempDir dir;
    const auto c4 = dir.write("c4.g", "4 4\n0 1\n1 2\n2 3\n3 0\n");
    const auto k18 = dir.write("k18.g", "9 8\n0 1\n0 2\n0 3\n0 4\n0 5\n0 6\n0 7\n0 8\n");

    const auto cube = run({"exact-cube", "--graph", c4});
    CHECK(cube.code == cli::kOk);
    CHECK(io::parse_representation(cube.out, "stdout").cube);

    const auto cr = run({"solve-cr", "--graph", c4, "--clique-remainder", "0,1,2"});
    CHECK(cr.code == cli::kOk);
    CHECK(io::parse_representation(cr.out, "stdout").rep.dimension() == 2);

    const auto p3 = dir.write("p3.rep", R"({"n": 3, "cube": false, "dims": [{"0": [1, 2], "1": [2, 3], "2": [3, 4]}]})");
    const auto fkv = run({"fkv", "--graph", c4, "--modulator", dir.write("s.mod", "0\n"), "--base-rep", p3});
    CHECK(fkv.code == cli::kOk);
    CHECK(fkv.err.find("dimension: 2") != std::string::npos);

    const auto p4 = dir.write("p4.rep", R"({"n": 4, "cube": false, "dims": [{"0": [4, 5], "1": [1, 2], "2": [2, 3], "3": [3, 4]}]})");
    const auto fke = run({"fke", "--graph", c4, "--modulator", dir.write("e.mod", "0 1 added\n"), "--base-rep", p4});
    CHECK(fke.code == cli::kOk);
    CHECK(io::parse_representation(fke.out, "stdout").rep.dimension() == 2);
    CHECK(run({"fke", "--graph", c4, "--modulator", dir.write("e2.mod", "0 2 added\n"), "--base-rep", p4}).code ==
          cli::kInputError);

    const auto approx = run({"approx", "--graph", c4, "--prune"});
    CHECK(approx.code == cli::kOk);
    CHECK(approx.err.find("t: 4") != std::string::npos);
    CHECK(io::parse_representation(approx.out, "stdout").rep.dimension() == 2);

    const auto mvc = run({"cube-mvc", "--graph", c4});
    CHECK(mvc.code == cli::kOk);
    CHECK(mvc.err.find("q: 1") != std::string::npos);

    const auto eps = run({"cube-mvc-eps", "--graph", k18, "--eps", "1"});
    CHECK(eps.code == cli::kOk);
    CHECK(eps.err.find("path: construction") != std::string::npos);
    CHECK(io::parse_representation(eps.out, "stdout").rep.dimension() == 3);

    CHECK(run({"cube-mvc", "--graph", c4, "--cover", "0"}).code == cli::kInputError);
    CHECK(run({"mvc", "--graph", c4}).out == "size: 2\nvertices: 0 2\n");
    CHECK(run({"mvc", "--graph", c4, "--k", "1"}).out == "size: none\nbound: 1\n");
    CHECK(run({"psi", "--graph", k18}).out == "psi: 8\n");
    const auto stats = run({"stats", "--graph", c4});
    CHECK(stats.out.find("m: 4") != std::string::npos);
    CHECK(stats.out.find("connected: true") != std::string::npos);

    const auto two_k2 = dir.write("2k2.g", "4 2\n0 1\n2 3\n");
    const auto dis = run({"cube-mvc", "--graph", two_k2});
    CHECK(dis.code == cli::kOk);
    CHECK(dis.err.find("warning: graph is disconnected") != std::string::npos);
}

TEST_CASE("cli output is deterministic") {
    TempDir dir;
    std::mt19937_64 rng(82);
    const auto g = random_graph(40, 0.5, rng);
    const auto path = dir.write("g.g", io::format_graph(g));
    const auto a = run({"approx", "--graph", path, "--threads", "1"});
    const auto b = run({"approx", "--graph", path, "--threads", "4"});
    CHECK(a.code == cli::kOk);
    CHECK(a.out == b.out);
    const auto c = run({"approx", "--graph", path, "--seed", "5", "--threads", "3"});
    const auto d = run({"approx", "--graph", path, "--seed", "5", "--threads", "3"});
    CHECK(c.out == d.out);
}

TEST_CASE("environment limits") {
    TempDir dir;
    const auto c8 = dir.write("c8.g", io::format_graph(cycle(8)));
    CHECK(run({"exact-box", "--graph", c8}).code == cli::kSizeGuard);
    ::setenv("BOXREP_LIMITS", "exact_box=8", 1);
    CHECK(run({"exact-box", "--graph", c8}).code == cli::kOk);
    CHECK(run({"exact-box", "--graph", c8, "--limit", "exact_box=7"}).code == cli::kSizeGuard);
    ::setenv("BOXREP_LIMITS", "bogus", 1);
    CHECK(run({"exact-box", "--graph", c8}).code == cli::kInputError);
    ::unsetenv("BOXREP_LIMITS");
}
