#pragma once

#include <iosfwd>
#include <string>

#include "ktdom/graph.hpp"

namespace ktdom {

// A graph with its declared clique parameter. The text format is bit-exact:
//
//   ktree-instance v1
//   k <k>
//   n <n>
//   m <edge count>
//   <u> <v>          (m lines, u < v, ascending lexicographic order,
//                     0-based decimal ids, single spaces, newline-terminated)
//
// parse(serialize(g)) reproduces the graph exactly, and equal graphs
// serialize to identical bytes.
struct Instance {
  int k = 0;
  Graph graph;
};

std::string serialize_instance(const Graph& g, int k);

// Strict parsers: any deviation from the format above (wrong header, edge
// count mismatch, out-of-range ids, self-loops, duplicates, misordered
// lines, trailing content) raises ParseError.
Instance parse_instance(std::istream& in);
Instance parse_instance(const std::string& text);

Instance load_instance(const std::string& path);
void save_instance(const std::string& path, const Graph& g, int k);

}  // namespace ktdom
