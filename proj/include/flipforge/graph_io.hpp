#pragma once

#include <iosfwd>
#include <string>

#include "flipforge/coloured_graph.hpp"

namespace flipforge {

// File formats, chosen by extension: ".json" is a JSON document
// {"vertices": n, "colours": k, "edges": [{"u":..,"v":..,"colour":..}, ...]},
// anything else is the edge-list text format: a header line "n k" followed
// by one line "u v c" per edge with u < v. Both UTF-8 with LF endings.
// Saving always emits the canonical form (sorted edges, u < v), so
// load(save(g)) == g.

ColouredGraph load_graph(const std::string& path);
void save_graph(const ColouredGraph& g, const std::string& path);

ColouredGraph read_edge_list(std::istream& in, const std::string& name);
void write_edge_list(const ColouredGraph& g, std::ostream& out);
ColouredGraph read_json_graph(std::istream& in, const std::string& name);
void write_json_graph(const ColouredGraph& g, std::ostream& out);

// Deterministic DOT output in sorted edge order; colour 1 -> "blue",
// 2 -> "red", 3 -> "green", higher colours from a fixed indexed palette.
void export_dot(const ColouredGraph& g, const std::string& path);
void write_dot(const ColouredGraph& g, std::ostream& out);

std::string dot_colour_name(int colour);

}  // namespace flipforge
