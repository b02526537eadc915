#include "boxrep/io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "boxrep/errors.hpp"

namespace boxrep::io {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> out;
    for (std::string tok; ss >> tok;) out.push_back(tok);
    return out;
}

bool is_blank_or_comment(const std::string& line) {
    const auto pos = line.find_first_not_of(" \t\r");
    return pos == std::string::npos || line[pos] == '#';
}

long long parse_int(const std::string& tok, const std::string& where) {
    long long value = 0;
    const auto* end = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(tok.data(), end, value);
    if (ec != std::errc{} || ptr != end) throw InputError(where + ": expected an integer, got '" + tok + "'");
    return value;
}

std::string at(const std::string& source, int line) { return source + ":" + std::to_string(line); }

}  // namespace

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Graph parse_graph(std::istream& in, const std::string& source) {
    std::string line;
    int line_no = 0;
    long long n = -1, m = -1;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        ++line_no;
        if (is_blank_or_comment(line)) continue;
        const auto tok = split_ws(line);
        if (tok.size() != 2) throw InputError(at(source, line_no) + ": expected two integers");
        const auto a = parse_int(tok[0], at(source, line_no));
        const auto b = parse_int(tok[1], at(source, line_no));
        if (n < 0) {
            if (a < 0 || b < 0) throw InputError(at(source, line_no) + ": negative header value");
            if (a > 1'000'000) throw InputError(at(source, line_no) + ": vertex count too large");
            n = a;
            m = b;
            continue;
        }
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw InputError(at(source, line_no) + ": vertex outside [0, " + std::to_string(n) + ")");
        if (a == b) throw InputError(at(source, line_no) + ": self-loop " + format_edge({int(a), int(b)}));
        edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
    }
    if (n < 0) throw InputError(source + ": missing 'n m' header");
    if (static_cast<long long>(edges.size()) != m)
        throw InputError(source + ": header declares " + std::to_string(m) + " edges, found " +
                         std::to_string(edges.size()));
    return Graph::from_edges(static_cast<int>(n), edges);
}

Graph read_graph(const std::filesystem::path& path) {
    std::istringstream in(slurp(path));
    return parse_graph(in, path.string());
}

std::string format_graph(const Graph& g) {
    const auto edges = g.edges();
    std::ostringstream out;
    out << g.size() << ' ' << edges.size() << '\n';
    for (const auto& [u, v] : edges) out << u << ' ' << v << '\n';
    return out.str();
}

RepresentationFile parse_representation(const std::string& text, const std::string& source) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(source + ": " + e.what());
    }
    auto fail = [&](const std::string& msg) -> InputError { return InputError(source + ": " + msg); };
    if (!doc.is_object()) throw fail("top level must be an object");
    if (!doc.contains("n") || !doc["n"].is_number_integer()) throw fail("missing integer field \"n\"");
    if (!doc.contains("dims") || !doc["dims"].is_array()) throw fail("missing array field \"dims\"");
    RepresentationFile out;
    const auto n = doc["n"].get<long long>();
    if (n < 0 || n > 1'000'000) throw fail("bad vertex count");
    out.rep.n = static_cast<int>(n);
    if (doc.contains("cube")) {
        if (!doc["cube"].is_boolean()) throw fail("\"cube\" must be a boolean");
        out.cube = doc["cube"].get<bool>();
    }
    int d = 0;
    for (const auto& dim : doc["dims"]) {
        const std::string where = "dimension " + std::to_string(d);
        if (!dim.is_object()) throw fail(where + " must be an object");
        IntervalRepresentation rep(out.rep.n);
        std::vector<char> seen(out.rep.n, 0);
        for (const auto& [key, value] : dim.items()) {
            const auto v = parse_int(key, source + ": " + where + " key");
            if (v < 0 || v >= n) throw fail(where + ": vertex " + key + " outside [0, " + std::to_string(n) + ")");
            if (!value.is_array() || value.size() != 2 || !value[0].is_number_integer() ||
                !value[1].is_number_integer())
                throw fail(where + ": vertex " + key + " needs [l, r] integers");
            const Interval iv{value[0].get<std::int64_t>(), value[1].get<std::int64_t>()};
            if (iv.l > iv.r) throw fail(where + ": vertex " + key + " has l > r");
            rep.set(static_cast<int>(v), iv);
            seen[v] = 1;
        }
        for (int v = 0; v < out.rep.n; ++v)
            if (!seen[v]) throw fail(where + ": vertex " + std::to_string(v) + " missing");
        out.rep.dims.push_back(std::move(rep));
        ++d;
    }
    return out;
}

RepresentationFile read_representation(const std::filesystem::path& path) {
    return parse_representation(slurp(path), path.string());
}

std::string format_representation(const RepresentationFile& file) {
    std::ostringstream out;
    out << "{\n  \"n\": " << file.rep.n << ",\n  \"cube\": " << (file.cube ? "true" : "false") << ",\n  \"dims\": [";
    for (int d = 0; d < file.rep.dimension(); ++d) {
        out << (d ? ",\n    {" : "\n    {");
        const auto& dim = file.rep.dims[d];
        for (int v = 0; v < file.rep.n; ++v) {
            if (v) out << ", ";
            out << '"' << v << "\": [" << dim[v].l << ", " << dim[v].r << ']';
        }
        out << '}';
    }
    out << (file.rep.dimension() ? "\n  ]\n}\n" : "]\n}\n");
    return out.str();
}

Modulator parse_modulator(std::istream& in, const std::string& source) {
    std::vector<std::pair<int, std::vector<std::string>>> lines;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (is_blank_or_comment(line)) continue;
        lines.emplace_back(line_no, split_ws(line));
    }
    const bool edge_form = !lines.empty() && lines.front().second.size() == 3 &&
                           std::isalpha(static_cast<unsigned char>(lines.front().second[2].front()));
    if (!edge_form) {
        if (lines.size() > 1) throw InputError(at(source, lines[1].first) + ": vertex modulator must be one line");
        VertexModulator vm;
        if (!lines.empty())
            for (const auto& tok : lines.front().second) {
                const auto v = parse_int(tok, at(source, lines.front().first));
                if (v < 0 || v > 1'000'000) throw InputError(at(source, lines.front().first) + ": bad vertex " + tok);
                vm.vertices.push_back(static_cast<int>(v));
            }
        return vm;
    }
    EdgeModulator em;
    for (const auto& [no, tok] : lines) {
        if (tok.size() != 3) throw InputError(at(source, no) + ": expected 'u v added' or 'u v deleted'");
        const auto u = parse_int(tok[0], at(source, no));
        const auto v = parse_int(tok[1], at(source, no));
        if (u < 0 || v < 0 || u > 1'000'000 || v > 1'000'000) throw InputError(at(source, no) + ": bad vertex id");
        const Edge e{static_cast<int>(u), static_cast<int>(v)};
        if (tok[2] == "added") em.added.push_back(e);
        else if (tok[2] == "deleted") em.deleted.push_back(e);
        else throw InputError(at(source, no) + ": tag must be 'added' or 'deleted', got '" + tok[2] + "'");
    }
    return em;
}

Modulator read_modulator(const std::filesystem::path& path) {
    std::istringstream in(slurp(path));
    return parse_modulator(in, path.string());
}

}  // namespace boxrep::io
