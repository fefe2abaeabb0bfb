#pragma once

#include <string>

#include "sfl/graph.hpp"

namespace sfl {

// Edge-list text: first line n, then one "u v" per line, 0-indexed.
// Blank lines ignored; self-loops and duplicate edges rejected.
Graph parse_edge_list(const std::string& text);
std::string to_edge_list(const Graph& g);

// graph6 as in the nauty formats.txt description, n <= 62 (one-byte header).
Graph parse_graph6(const std::string& text);
std::string to_graph6(const Graph& g);

enum class GraphFormat { edge_list, graph6 };

// Edge lists start with a digit; every graph6 byte is >= 63, so the first
// non-space character decides.
GraphFormat detect_format(const std::string& text);
Graph parse_graph_auto(const std::string& text);

}  // namespace sfl
