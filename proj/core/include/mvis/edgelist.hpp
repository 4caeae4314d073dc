#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "mvis/graph.hpp"

namespace mvis {

// Text format: optional '#' comments, a "<n> <m>" header, then exactly m
// lines "<u> <v>". Readers are lenient about comments and blank lines;
// writers emit the canonical form (header, then u < v edges in
// lexicographic order, newline-terminated).
struct EdgeListError : std::runtime_error {
    EdgeListError(int line, const std::string& what);
    int line;
};

Graph read_edge_list(std::istream& in);
Graph read_edge_list_text(const std::string& text);
Graph read_edge_list_file(const std::string& path);

std::string write_edge_list(const Graph& g);
void write_edge_list_file(const std::string& path, const Graph& g);

}  // namespace mvis
