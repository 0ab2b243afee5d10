#ifndef CW_GRAPH_HPP
#define CW_GRAPH_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cw/bitset.hpp"

namespace cw {

class ParseError : public std::runtime_error {
public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}

  int line() const { return line_; }

private:
  int line_;
};

// Immutable simple undirected graph on vertices 0..n-1, adjacency kept as
// per-vertex bit rows.
class Graph {
public:
  Graph() = default;

  explicit Graph(int n) : n_(n), adj_(n, VertexSet(n)) {}

  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) {
      if (u < 0 || u >= n || v < 0 || v >= n)
        throw std::out_of_range("edge endpoint out of range");
      if (u == v) throw std::invalid_argument("self-loop");
      g.adj_[u].add(v);
      g.adj_[v].add(u);
    }
    return g;
  }

  int vertex_count() const { return n_; }

  int edge_count() const {
    int d = 0;
    for (const auto& row : adj_) d += row.size();
    return d / 2;
  }

  bool adjacent(int u, int v) const { return adj_[u].contains(v); }

  const VertexSet& neighbours(int v) const { return adj_[v]; }

  int degree(int v) const { return adj_[v].size(); }

  VertexSet neighbours_in(int v, const VertexSet& X) const {
    return adj_[v] & X;
  }

  VertexSet vertices() const { return VertexSet::full(n_); }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
      for (int v = adj_[u].next(u); v >= 0; v = adj_[u].next(v))
        out.emplace_back(u, v);
    return out;
  }

  // Subgraph induced by S, relabelled 0..|S|-1 in increasing vertex order.
  // If mapping is non-null it receives new-index -> old-vertex.
  Graph induced(const VertexSet& S, std::vector<int>* mapping = nullptr) const;
  Graph induced(const std::vector<int>& S, std::vector<int>* mapping = nullptr) const;

  bool is_clique(const VertexSet& S) const {
    for (int v = S.first(); v >= 0; v = S.next(v)) {
      VertexSet rest = S;
      rest.remove(v);
      if (!rest.is_subset_of(adj_[v])) return false;
    }
    return true;
  }

  bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

private:
  int n_ = 0;
  std::vector<VertexSet> adj_;
};

// DIMACS-flavoured edge list: comments "c ...", header "p edge <n> <m>",
// then m lines "e <u> <v>" with 1-based endpoints.
Graph parse_graph(std::string_view text);

std::string write_graph(const Graph& g);

}  // namespace cw

#endif
