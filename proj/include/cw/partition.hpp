#ifndef CW_PARTITION_HPP
#define CW_PARTITION_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cw/graph.hpp"

namespace cw {

// Ordered list of named, pairwise-disjoint vertex sets covering the graph.
// Empty parts are allowed and kept (they never block anything).
struct VertexPartition {
  std::vector<std::string> names;
  std::vector<VertexSet> parts;

  int part_count() const { return static_cast<int>(parts.size()); }

  void add(std::string name, VertexSet set) {
    names.push_back(std::move(name));
    parts.push_back(std::move(set));
  }

  // disjointness + coverage of V(g)
  bool is_valid_for(const Graph& g) const;

  VertexSet complement_of(const Graph& g, int i) const;

  static VertexPartition singletons(const Graph& g);
};

enum class Uniformity { Complete, Anticomplete, Mixed };

struct SetRelation {
  Uniformity uniformity = Uniformity::Mixed;
  bool monotone = false;
  bool vacuous = false;  // one side empty

  bool uniform() const { return uniformity != Uniformity::Mixed; }
};

// x ~ y, x' ~ y', x !~ y', x' !~ y  with x,x' in X and y,y' in Y
struct CrossingWitness {
  int x, x_prime, y, y_prime;
};

SetRelation relation_between(const Graph& g, const VertexSet& X,
                             const VertexSet& Y);

bool is_monotone_between(const Graph& g, const VertexSet& X, const VertexSet& Y);

std::optional<CrossingWitness> crossing_witness(const Graph& g,
                                                const VertexSet& X,
                                                const VertexSet& Y);

class MonotoneError : public std::runtime_error {
public:
  MonotoneError(const std::string& what, CrossingWitness w)
      : std::runtime_error(what), witness(w) {}
  CrossingWitness witness;
};

// X sorted so neighbourhoods in Y are non-decreasing under inclusion; ties
// broken by vertex index. Throws MonotoneError if the pair is not monotone.
std::vector<int> monotone_order(const Graph& g, const VertexSet& X,
                                const VertexSet& Y);

struct MonotonePartitionVerdict {
  bool ok = true;
  int violating_part = -1;
  std::optional<CrossingWitness> witness;
};

MonotonePartitionVerdict is_monotone_partition(const Graph& g,
                                               const VertexPartition& P);

// (maximal, minimal) vertices of part i by inclusion of the neighbourhood
// outside the part. Requires the part non-empty and monotone to its
// complement.
std::pair<VertexSet, VertexSet> extreme_vertices(const Graph& g,
                                                 const VertexPartition& P,
                                                 int i);

// One node per part, edge iff the two parts are not uniform to each other.
Graph box_graph(const Graph& g, const VertexPartition& P);

bool is_forest(const Graph& b);

struct HevVerdict {
  bool ok = true;
  std::optional<std::vector<int>> violating_subset;
};

// Exhaustive check of the hereditary extreme-vertex property over every
// non-empty vertex subset. Requires n <= 18 and P monotone.
HevVerdict hev_holds_brute(const Graph& g, const VertexPartition& P);

// Every part a clique, box graph of max degree <= 1, and each non-uniform
// pair inducing a C4-free subgraph.
bool near_uniform_check(const Graph& g, const VertexPartition& P);

}  // namespace cw

#endif
