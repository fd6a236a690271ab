#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "stight/digraph.hpp"

namespace stight {

// Edge-list text format: first line is the vertex count, then one "u v" line
// per arc. Writers sort arcs; readers accept any order but reject loops,
// duplicate arcs, out-of-range ids and trailing garbage.

void write_edge_list(std::ostream& os, const Digraph& d);
std::string to_edge_list(const Digraph& d);
Digraph read_digraph(std::istream& is);
Digraph parse_digraph(std::string_view text);
/// As read_digraph, additionally rejecting 2-cycles.
Orientation read_orientation(std::istream& is);
Orientation parse_orientation(std::string_view text);
Orientation load_orientation(const std::string& path);
void save_edge_list(const std::string& path, const Digraph& d);

/// DOT digraph block: every vertex on its own line, then one "u -> v;" per
/// arc in sorted order.
void write_dot(std::ostream& os, const Digraph& d, std::string_view name = "G");
std::string to_dot(const Digraph& d, std::string_view name = "G");

}  // namespace stight
