#ifndef CW_GENERATORS_HPP
#define CW_GENERATORS_HPP

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cw/graph.hpp"
#include "cw/partition.hpp"

namespace cw {

// Targets for one structured instance around a C6 anchor. Forced relations
// (joins/anticompletions between classes) are installed deterministically;
// the free pairs get randomly sampled staircases (nested neighbourhoods), so
// every part is monotone to its complement by construction. The sample is
// still rejection-filtered through the recognizer and the partition builder.
struct InstanceParams {
  int x2_size = 0;
  int x2_pair = 0;  // 0, 1 or 2: which opposite anchor pair X2 attaches to
  std::array<int, 6> x3_sizes{};
  std::array<int, 6> x4_sizes{};
  std::array<int, 6> x4_side0{};  // members of X4_j forced to the low side

  int x6_size = 0;

  enum class TripleKind { Sparse, Triangle };
  std::array<TripleKind, 2> configs{TripleKind::Sparse, TripleKind::Sparse};
  // Triangle only: requested inner-side sizes per member (clamped to [1, size])
  std::array<std::array<int, 3>, 2> inner_sizes{{{1, 1, 1}, {1, 1, 1}}};

  std::uint64_t seed = 1;
  int max_retries = 32;
};

struct GeneratedInstance {
  Graph graph;
  VertexPartition intended;  // the 26 parts as laid out by the generator
  int attempts = 0;
};

class GenerateError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Throws GenerateError when every retry is rejected.
GeneratedInstance gen_instance(const InstanceParams& p);

// Named parameter sets covering the feasible shapes: triangle and sparse
// configurations, non-trivial X4 splits, X2 and X6 classes, sizes up to
// about sixty vertices.
std::vector<std::pair<std::string, InstanceParams>> instance_presets();

struct ThreeRing {
  Graph graph;
  VertexPartition partition;  // the three cliques
};

// Three cliques of size m in a cycle; vertex i of each clique is adjacent to
// the first profiles[t][i] vertices of the next clique. Profiles must be
// non-increasing (staircases), which makes every part monotone to its
// complement by construction.
ThreeRing gen_3ring(int m, const std::array<std::vector<int>, 3>& profiles);

// A profile that leaves every extreme vertex of every part non-uniform, so
// the greedy peel gets stuck immediately (box graph is a triangle).
ThreeRing gen_3ring_stuck();

// Reproducible Erdos-Renyi sample: one raw mt19937_64 draw per vertex pair in
// row order, edge present when the draw falls under p * 2^64.
Graph gen_random(int n, double p, std::uint64_t seed);

}  // namespace cw

#endif
