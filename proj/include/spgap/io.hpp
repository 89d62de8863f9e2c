#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "spgap/graph.hpp"

namespace spgap::io {

// Text formats, ASCII decimal, every line newline-terminated:
//
//   edge list      "V E", then E lines "u v" (canonical order, u < v)
//   triangulation  edge list, then "faces F", then F lines "a b c"
//   rooted graph   edge list, then "root r"
//
// Readers report the offending line number in IoError messages.

void write_edge_list(std::ostream& out, const Graph& g);
void write_triangulation(std::ostream& out, const SphereTriangulation& t);
void write_rooted(std::ostream& out, const Graph& g, VertexId root);

Graph read_edge_list(std::istream& in);
SphereTriangulation read_triangulation(std::istream& in);
std::pair<Graph, VertexId> read_rooted(std::istream& in);

// Reads any of the three formats, ignoring a faces/root trailer.
Graph read_any_graph(std::istream& in);

std::string to_string(const Graph& g);
std::string to_string(const SphereTriangulation& t);

// File helpers; throw IoError when the file cannot be opened.
Graph load_graph(const std::filesystem::path& path);
SphereTriangulation load_triangulation(const std::filesystem::path& path);
std::pair<Graph, VertexId> load_rooted(const std::filesystem::path& path);
void save_text(const std::filesystem::path& path, const std::string& content);

}  // namespace spgap::io
