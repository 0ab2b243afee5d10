#include "cw/graph.hpp"

#include <set>
#include <sstream>

namespace cw {

Graph Graph::induced(const VertexSet& S, std::vector<int>* mapping) const {
  if (S.universe() != n_ && !S.empty())
    throw std::invalid_argument("vertex set universe mismatch");
  std::vector<int> verts = S.to_vector();
  return induced(verts, mapping);
}

Graph Graph::induced(const std::vector<int>& S, std::vector<int>* mapping) const {
  for (int v : S)
    if (v < 0 || v >= n_) throw std::out_of_range("vertex out of range");
  Graph h(static_cast<int>(S.size()));
  for (std::size_t i = 0; i < S.size(); ++i)
    for (std::size_t j = i + 1; j < S.size(); ++j)
      if (adjacent(S[i], S[j])) {
        h.adj_[i].add(static_cast<int>(j));
        h.adj_[j].add(static_cast<int>(i));
      }
  if (mapping) *mapping = S;
  return h;
}

Graph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  int n = -1, m = -1, seen = 0;
  Graph g;
  std::vector<std::pair<int, int>> edges;
  std::set<std::pair<int, int>> dedup;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == 'c') continue;
    std::istringstream ls(line);
    if (line[0] == 'p') {
      if (n >= 0) throw ParseError(lineno, "duplicate header");
      std::string p, kind;
      ls >> p >> kind >> n >> m;
      if (!ls || kind != "edge" || n < 0 || m < 0)
        throw ParseError(lineno, "malformed header, expected 'p edge <n> <m>'");
    } else if (line[0] == 'e') {
      if (n < 0) throw ParseError(lineno, "edge before header");
      std::string e;
      int u, v;
      ls >> e >> u >> v;
      if (!ls) throw ParseError(lineno, "malformed edge line");
      if (u < 1 || u > n || v < 1 || v > n)
        throw ParseError(lineno, "vertex index out of range");
      if (u == v) throw ParseError(lineno, "self-loop");
      auto key = std::minmax(u, v);
      if (!dedup.insert(key).second) throw ParseError(lineno, "duplicate edge");
      edges.emplace_back(u - 1, v - 1);
      ++seen;
    } else {
      throw ParseError(lineno, "unrecognized line");
    }
  }
  if (n < 0) throw ParseError(lineno, "missing header");
  if (seen != m)
    throw ParseError(lineno, "edge count mismatch: header declares " +
                                 std::to_string(m) + ", found " +
                                 std::to_string(seen));
  return Graph::from_edges(n, edges);
}

std::string write_graph(const Graph& g) {
  std::ostringstream out;
  auto edges = g.edges();
  out << "p edge " << g.vertex_count() << " " << edges.size() << "\n";
  for (auto [u, v] : edges) out << "e " << u + 1 << " " << v + 1 << "\n";
  return out.str();
}

}  // namespace cw
