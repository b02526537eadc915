#pragma once

// Text formats:
//   graph file           "n m" header, then m lines "u v"; '#' lines are comments
//   representation file  {"n": 3, "cube": false, "dims": [{"0": [1, 2], ...}, ...]}
//   modulator file       one line of vertex ids, or lines "u v added" / "u v deleted"

#include <filesystem>
#include <istream>
#include <string>
#include <variant>

#include "boxrep/editdist.hpp"
#include "boxrep/graph.hpp"
#include "boxrep/reps.hpp"

namespace boxrep::io {

Graph parse_graph(std::istream& in, const std::string& source);
Graph read_graph(const std::filesystem::path& path);
std::string format_graph(const Graph& g);

struct RepresentationFile {
    BoxRepresentation rep;
    bool cube = false;
    friend bool operator==(const RepresentationFile&, const RepresentationFile&) = default;
};

RepresentationFile parse_representation(const std::string& text, const std::string& source);
RepresentationFile read_representation(const std::filesystem::path& path);
/// Canonical serialization: one dimension per line, vertex keys in id order.
std::string format_representation(const RepresentationFile& file);

using Modulator = std::variant<VertexModulator, EdgeModulator>;
Modulator parse_modulator(std::istream& in, const std::string& source);
Modulator read_modulator(const std::filesystem::path& path);

/// Reads a whole file, raising InputError if it cannot be opened.
std::string slurp(const std::filesystem::path& path);

}  // namespace boxrep::io
