#include "boxrep/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "boxrep/approxbox.hpp"
#include "boxrep/editdist.hpp"
#include "boxrep/errors.hpp"
#include "boxrep/io.hpp"

namespace boxrep::cli {

namespace {

std::string join(const std::vector<int>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? " " : "") + std::to_string(xs[i]);
    return s;
}

std::vector<int> parse_id_list(const std::string& text, const std::string& what) {
    std::vector<int> out;
    std::string cleaned = text;
    for (auto& c : cleaned)
        if (c == ',') c = ' ';
    std::istringstream ss(cleaned);
    for (std::string tok; ss >> tok;) {
        try {
            std::size_t used = 0;
            const int v = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            out.push_back(v);
        } catch (const std::exception&) {
            throw InputError(what + ": bad vertex id '" + tok + "'");
        }
    }
    return out;
}

struct Options {
    std::string graph, rep, base_rep, modulator, out_path, report_path, clique_remainder, cover;
    std::vector<std::string> limit_overrides;
    std::optional<int> k;
    std::optional<double> eps;
    std::optional<std::uint64_t> seed;
    bool prune = false;
    bool cube = false;
    int threads = 1;
};

class Runner {
public:
    Runner(const Options& opt, std::ostream& out, std::ostream& err) : opt_(opt), out_(out), err_(err) {
        if (const char* env = std::getenv("BOXREP_LIMITS")) apply_limit_overrides(limits_, env);
        for (const auto& item : opt_.limit_overrides) apply_limit_overrides(limits_, item);
    }

    int dispatch(const std::string& command) {
        if (command == "exact-box") return emit(load_graph(), optimal_box_representation(load_graph(), limits_.exact), false);
        if (command == "exact-cube") return emit(load_graph(), optimal_cube_representation(load_graph(), limits_.exact), true);
        if (command == "solve-cr") return solve_cr();
        if (command == "fkv") return fkv();
        if (command == "fke") return fke();
        if (command == "approx") return approx();
        if (command == "cube-mvc") return cube_mvc(false);
        if (command == "cube-mvc-eps") return cube_mvc(true);
        if (command == "verify") return verify();
        if (command == "mvc") return mvc();
        if (command == "psi") return psi();
        if (command == "stats") return stats();
        throw InputError("unknown subcommand " + command);
    }

private:
    const Graph& load_graph() {
        if (!graph_) {
            if (opt_.graph.empty()) throw InputError("--graph is required");
            graph_ = io::read_graph(opt_.graph);
        }
        return *graph_;
    }

    std::ostream& report() {
        if (!opt_.report_path.empty()) {
            if (!report_file_.is_open()) {
                report_file_.open(opt_.report_path, std::ios::binary);
                if (!report_file_) throw InputError("cannot write " + opt_.report_path);
            }
            return report_file_;
        }
        return err_;
    }

    void write_text(const std::string& text) {
        if (opt_.out_path.empty()) {
            out_ << text;
            return;
        }
        std::ofstream f(opt_.out_path, std::ios::binary);
        if (!f) throw InputError("cannot write " + opt_.out_path);
        f << text;
    }

    int emit(const Graph& g, const BoxRepresentation& rep, bool cube) {
        require_verified(g, rep, cube, "cli");
        write_text(io::format_representation({rep, cube}));
        return kOk;
    }

    int solve_cr() {
        const auto& g = load_graph();
        if (opt_.clique_remainder.empty() && g.size() > 0)
            throw InputError("--clique-remainder is required");
        const auto a = parse_id_list(opt_.clique_remainder, "--clique-remainder");
        return emit(g, solve_clique_remainder(g, a, limits_.nice), false);
    }

    io::Modulator load_modulator() {
        if (opt_.modulator.empty()) throw InputError("--modulator is required");
        return io::read_modulator(opt_.modulator);
    }

    BoxRepresentation load_base() {
        if (opt_.base_rep.empty()) throw InputError("--base-rep is required");
        return io::read_representation(opt_.base_rep).rep;
    }

    void split_report(const SplitRepresentation& s) {
        report() << "first_dims: " << s.first.dimension() << "\nsecond_dims: " << s.second.dimension()
                 << "\ndimension: " << s.rep.dimension() << "\n";
    }

    int fkv() {
        const auto& g = load_graph();
        auto mod = load_modulator();
        if (!std::holds_alternative<VertexModulator>(mod))
            throw InputError(opt_.modulator + ": fkv needs a vertex modulator");
        const auto result = box_rep_fkv(g, std::get<VertexModulator>(mod), load_base(), limits_.nice);
        split_report(result);
        return emit(g, result.rep, false);
    }

    int fke() {
        const auto& g = load_graph();
        auto mod = load_modulator();
        if (!std::holds_alternative<EdgeModulator>(mod)) {
            // an empty file parses as a vertex modulator; treat it as no edits
            const auto& vm = std::get<VertexModulator>(mod);
            if (!vm.vertices.empty()) throw InputError(opt_.modulator + ": fke needs an edge modulator");
            mod = EdgeModulator{};
        }
        const auto result = box_rep_fke(g, std::get<EdgeModulator>(mod), load_base(), limits_.exact);
        split_report(result);
        return emit(g, result.rep, false);
    }

    int approx() {
        const auto& g = load_graph();
        ApproxOptions options;
        options.part_size = opt_.k;
        options.shuffle_seed = opt_.seed;
        options.prune = opt_.prune;
        options.threads = opt_.threads;
        options.limits = limits_.nice;
        const auto result = approx_box(g, options);
        const auto& r = result.report;
        auto& rep = report();
        rep << "n: " << r.n << "\nk: " << r.k << "\nt: " << r.t << "\nt_formula: " << r.t_formula
            << "\nbound_t_times_k: " << r.t * r.k << "\nper_part_dims:";
        for (int d : r.part_dims) rep << ' ' << d;
        rep << "\ndimension_before_prune: " << r.dimension_before_prune << "\ndimension: " << result.rep.dimension()
            << "\n";
        return emit(g, result.rep, false);
    }

    VertexSet cover_for(const Graph& g) {
        if (!opt_.cover.empty()) return normalize_vertex_set(g.size(), parse_id_list(opt_.cover, "--cover"));
        const int budget = opt_.k.value_or(g.size());
        auto cover = min_vertex_cover(g, budget);
        if (!cover) throw InputError("no vertex cover of size <= " + std::to_string(budget));
        return *cover;
    }

    int cube_mvc(bool with_eps) {
        const auto& g = load_graph();
        const auto cover = cover_for(g);
        if (!is_connected(g)) err_ << "warning: graph is disconnected\n";
        auto& rep = report();
        rep << "cover: " << join(cover) << "\n";
        if (!with_eps) {
            const auto result = cube_rep_mvc(g, cover, limits_.exact);
            rep << "p: " << result.report.p << "\nq: " << result.report.q << "\nt: " << result.report.t
                << "\ndimension: " << result.rep.dimension() << "\n";
            return emit(g, result.rep, true);
        }
        if (!opt_.eps) throw InputError("--eps is required");
        const auto result = cube_rep_mvc_eps(g, cover, *opt_.eps, limits_.exact);
        rep << "f_k_eps: " << result.report.threshold << "\npath: " << (result.report.oracle_path ? "oracle" : "construction")
            << "\n";
        if (result.report.construction)
            rep << "p: " << result.report.construction->p << "\nq: " << result.report.construction->q << "\n";
        rep << "dimension: " << result.rep.dimension() << "\n";
        return emit(g, result.rep, true);
    }

    int verify() {
        const auto& g = load_graph();
        if (opt_.rep.empty()) throw InputError("--rep is required");
        const auto file = io::read_representation(opt_.rep);
        const bool cube = opt_.cube || file.cube;
        const auto v = verify_representation(g, file.rep, cube);
        std::ostringstream body;
        body << "valid: " << (v.valid ? "true" : "false") << "\n";
        body << "dimension: " << file.rep.dimension() << "\n";
        body << "cube_checked: " << (cube ? "true" : "false") << "\n";
        if (!v.valid) {
            body << "reason: " << v.reason << "\n";
            if (v.witness) body << "witness: " << format_edge(*v.witness) << "\n";
            if (v.dimension) body << "offending_dimension: " << *v.dimension << "\n";
        }
        write_text(body.str());
        return kOk;
    }

    int mvc() {
        const auto& g = load_graph();
        const int budget = opt_.k.value_or(g.size());
        const auto cover = min_vertex_cover(g, budget);
        if (!cover) write_text("size: none\nbound: " + std::to_string(budget) + "\n");
        else write_text("size: " + std::to_string(cover->size()) + "\nvertices: " + join(*cover) + "\n");
        return kOk;
    }

    int psi() {
        write_text("psi: " + std::to_string(compute_psi(load_graph(), limits_.psi)) + "\n");
        return kOk;
    }

    int stats() {
        const auto& g = load_graph();
        int min_deg = g.size() ? g.size() : 0, max_deg = 0;
        for (int v = 0; v < g.size(); ++v) {
            min_deg = std::min(min_deg, g.degree(v));
            max_deg = std::max(max_deg, g.degree(v));
        }
        std::ostringstream body;
        body << "n: " << g.size() << "\nm: " << g.edge_count() << "\ncomplete: " << (g.is_complete() ? "true" : "false")
             << "\nconnected: " << (is_connected(g) ? "true" : "false") << "\nmin_degree: " << min_deg
             << "\nmax_degree: " << max_deg << "\n";
        const int budget = opt_.k.value_or(std::min(g.size(), 20));
        if (auto cover = min_vertex_cover(g, budget)) body << "mvc: " << cover->size() << "\n";
        else body << "mvc: > " << budget << "\n";
        if (g.size() <= std::min(limits_.psi.max_vertices, 64)) body << "psi: " << compute_psi(g, limits_.psi) << "\n";
        write_text(body.str());
        return kOk;
    }

    const Options& opt_;
    std::ostream& out_;
    std::ostream& err_;
    Limits limits_;
    std::optional<Graph> graph_;
    std::ofstream report_file_;
};

}  // namespace

void apply_limit_overrides(Limits& limits, const std::string& overrides) {
    std::string cleaned = overrides;
    for (auto& c : cleaned)
        if (c == ',') c = ' ';
    std::istringstream ss(cleaned);
    for (std::string item; ss >> item;) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw InputError("limit override '" + item + "' is not key=value");
        const auto key = item.substr(0, eq);
        int value = 0;
        try {
            std::size_t used = 0;
            value = std::stoi(item.substr(eq + 1), &used);
            if (used != item.size() - eq - 1 || value < 0) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw InputError("limit override '" + item + "' needs a non-negative integer");
        }
        if (key == "exact_box") limits.exact.max_box_vertices = value;
        else if (key == "exact_cube") limits.exact.max_cube_vertices = value;
        else if (key == "nice") limits.nice.max_remainder = value;
        else if (key == "psi") limits.psi.max_vertices = value;
        else throw InputError("unknown limit key '" + key + "' (exact_box, exact_cube, nice, psi)");
    }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Box and cube representations of graphs", "boxrep"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--graph", opt.graph, "graph file");
        sub->add_option("--out", opt.out_path, "output file (default stdout)");
        sub->add_option("--report", opt.report_path, "report file (default stderr)");
        sub->add_option("--limit", opt.limit_overrides, "size guard override key=value")->take_all();
    };
    struct Sub {
        const char* name;
        const char* help;
    };
    const Sub subs[] = {
        {"exact-box", "optimum box representation by enumeration"},
        {"exact-cube", "optimum cube representation by enumeration"},
        {"solve-cr", "optimum box representation when V minus A is a clique"},
        {"fkv", "box representation from a vertex modulator and a base representation"},
        {"fke", "box representation from an edge modulator and a base representation"},
        {"approx", "general approximation by clique-completed parts"},
        {"cube-mvc", "cube representation from a vertex cover (factor 2)"},
        {"cube-mvc-eps", "cube representation from a vertex cover (factor 1 + eps)"},
        {"verify", "check a representation file against a graph"},
        {"mvc", "minimum vertex cover"},
        {"psi", "largest induced star leaf count"},
        {"stats", "graph statistics"},
    };
    for (const auto& s : subs) {
        auto* sub = app.add_subcommand(s.name, s.help);
        add_common(sub);
        const std::string name = s.name;
        if (name == "solve-cr") sub->add_option("--clique-remainder", opt.clique_remainder, "A as comma/space separated ids");
        if (name == "fkv" || name == "fke") {
            sub->add_option("--modulator", opt.modulator, "modulator file");
            sub->add_option("--base-rep", opt.base_rep, "representation file of the base graph");
        }
        if (name == "approx") {
            sub->add_option("--k", opt.k, "part size");
            sub->add_option("--seed", opt.seed, "shuffle vertices with this seed before partitioning");
            sub->add_flag("--prune", opt.prune, "drop redundant dimensions");
            sub->add_option("--threads", opt.threads, "worker threads");
        }
        if (name == "cube-mvc" || name == "cube-mvc-eps") {
            sub->add_option("--cover", opt.cover, "vertex cover to use (default: computed)");
            sub->add_option("--k", opt.k, "vertex cover budget when computing one");
        }
        if (name == "cube-mvc-eps") sub->add_option("--eps", opt.eps, "epsilon > 0");
        if (name == "verify") {
            sub->add_option("--rep", opt.rep, "representation file");
            sub->add_flag("--cube", opt.cube, "also require equal lengths per dimension");
        }
        if (name == "mvc" || name == "stats") sub->add_option("--k", opt.k, "vertex cover budget");
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }

    try {
        Runner runner(opt, out, err);
        return runner.dispatch(app.get_subcommands().front()->get_name());
    } catch (const SizeGuardError& e) {
        err << "size guard: " << e.what() << "\n";
        return kSizeGuard;
    } catch (const InputError& e) {
        err << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const DefectError& e) {
        err << "internal verification failure: " << e.what() << "\n";
        return kDefect;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kDefect;
    }
}

}  // namespace boxrep::cli
