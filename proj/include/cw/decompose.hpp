#ifndef CW_DECOMPOSE_HPP
#define CW_DECOMPOSE_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cw/graph.hpp"
#include "cw/partition.hpp"
#include "cw/patterns.hpp"

namespace cw {

// Classes of outside vertices by their adjacency to the anchor 6-cycle
// (c_1..c_6 = anchor[0..5], all subscripts modulo 6):
//   x2      - adjacent to an opposite pair {c_j, c_j+3}
//   x3[j]   - adjacent to the consecutive run c_j, c_j+1, c_j+2
//   x4[j]   - adjacent to the consecutive run c_j .. c_j+3
//   x6      - adjacent to the whole anchor
struct C6Classes {
  std::array<int, 6> anchor{};
  int x2_index = -1;  // 0-based j of the opposite pair, canonical in {0,1,2}
  VertexSet x2;
  std::array<VertexSet, 6> x3;
  std::array<VertexSet, 6> x4;
  VertexSet x6;
};

// Structural violation: the input cannot be decomposed, witnessed by an
// induced forbidden pattern (or a missing C6).
class DecomposeError : public std::runtime_error {
public:
  DecomposeError(const std::string& what, std::string pattern,
                 std::vector<int> witness, int vertex = -1)
      : std::runtime_error(what), pattern(std::move(pattern)),
        witness(std::move(witness)), vertex(vertex) {}

  std::string pattern;       // "4K1", "C4", "P6", or "" when none applies
  std::vector<int> witness;  // vertices inducing the pattern
  int vertex;                // offending vertex, when meaningful
};

C6Classes classify_by_c6(const Graph& g, const std::array<int, 6>& anchor);

// Partition of x4[j] into (complete to x3[j+5], complete to x3[j+2]);
// vertices complete to both go to the first side.
std::pair<VertexSet, VertexSet> split_x4(const Graph& g, int j,
                                         const C6Classes& cls);

// Configuration of the triple x3[p], x3[p+2], x3[p+4] (p = parity 0 or 1).
struct TripleConfig {
  enum Kind { Sparse, Triangle };
  Kind kind = Sparse;
  std::array<int, 3> members{};   // class indices p, p+2, p+4
  std::array<int, 3> triangle{-1, -1, -1};  // one vertex per member set
  std::array<VertexSet, 3> inner;  // X^1 sides, aligned with members
  std::array<VertexSet, 3> outer;  // X^0 sides
};

TripleConfig triangle_configuration(const Graph& g, const C6Classes& cls,
                                    int parity);

struct ObservationVerdict {
  std::string name;
  int j = -1;  // 1-based position, -1 when not applicable
  bool pass = true;
  std::optional<std::pair<int, int>> witness;  // first counterexample pair
};

struct DecompositionReport {
  std::array<int, 6> anchor{};
  C6Classes classes;
  std::array<std::pair<VertexSet, VertexSet>, 6> x4_split;
  std::array<TripleConfig, 2> configs;  // parity 0, parity 1
  VertexPartition partition;            // the fixed 26-part order
  bool monotone = false;
  std::vector<ObservationVerdict> verdicts;

  bool all_pass() const;
  std::string to_json() const;
};

// Full pipeline: class gate, anchor, classification, splits, configurations,
// the 26-part partition, monotonicity, and all observation verdicts.
DecompositionReport build_partition(const Graph& g);

std::vector<ObservationVerdict> verify_observations(const Graph& g,
                                                    const DecompositionReport& r);

std::string partition_to_json(const VertexPartition& P);
VertexPartition partition_from_json(const std::string& text, int universe);

}  // namespace cw

#endif
