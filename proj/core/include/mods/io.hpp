#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <string_view>

#include "mods/families.hpp"

namespace mods {

// Text formats:
//
//   digraph <n> <m>        graph <n> <m>
//   <u> <v>   (m lines)    <u> <v>   (m lines, unordered)
//
// Vertices are 0-based. Blank lines and '#' comments are ignored. Parse
// failures throw Error(parse_error) with the offending line number.
Instance read_instance(std::istream& in);
Digraph read_digraph(std::istream& in);
Graph read_graph(std::istream& in);

void write_digraph(std::ostream& out, const Digraph& d);
void write_graph(std::ostream& out, const Graph& g);
void write_instance(std::ostream& out, const Instance& instance);

// A family spec string ("dipath:8") or a path to an instance file.
Instance load_instance(std::string_view source);

}  // namespace mods
