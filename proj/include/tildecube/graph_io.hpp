#pragma once

#include <ostream>
#include <string>

#include "tildecube/cube.hpp"

namespace tildecube {

/// Display name such as "Q_4", "Q~_5" or "Q~_5(1010)".
inline std::string graph_name(const CubeGraph& g) {
  std::string name = g.metric() == Metric::Tilde ? "Q~_" : "Q_";
  name += std::to_string(g.order());
  if (g.avoided()) name += "(" + g.avoided()->str() + ")";
  return name;
}

/// Plain edge list, one "word word" line per edge, lexicographically sorted.
inline void write_edge_list(const CubeGraph& g, std::ostream& os) {
  for (const auto& [i, j] : g.edges())
    os << g.vertex(i).str() << ' ' << g.vertex(j).str() << '\n';
}

/// Graphviz DOT with binary-string vertex labels. The comment header carries
/// the vertex and edge counts.
inline void write_dot(const CubeGraph& g, std::ostream& os) {
  os << "// " << graph_name(g) << ": " << g.vertex_count() << " vertices, " << g.edge_count()
     << " edges\n";
  os << "graph \"" << graph_name(g) << "\" {\n";
  for (const BinaryWord& w : g.vertices()) os << "  \"" << w.str() << "\";\n";
  for (const auto& [i, j] : g.edges())
    os << "  \"" << g.vertex(i).str() << "\" -- \"" << g.vertex(j).str() << "\";\n";
  os << "}\n";
}

}  // namespace tildecube
