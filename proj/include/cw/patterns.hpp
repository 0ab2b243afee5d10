#ifndef CW_PATTERNS_HPP
#define CW_PATTERNS_HPP

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cw/graph.hpp"

namespace cw {

// Small named patterns (all eleven four-vertex graphs plus the ones used by
// the class definition) and parameterized paths/cycles.
struct PatternId {
  enum class Kind {
    FourK1,
    C4,
    P6,
    C6,
    K4,
    Diamond,
    Paw,
    Claw,
    CoDiamond,
    TwoK2,
    CoPaw,
    CoClaw,
    P4,
    Cycle,
    Path,
  };

  Kind kind = Kind::C4;
  int k = 0;  // only for Cycle / Path

  static PatternId cycle(int k) { return {Kind::Cycle, k}; }
  static PatternId path(int k) { return {Kind::Path, k}; }

  int order() const;
  std::string name() const;
  Graph graph() const;

  bool operator==(const PatternId&) const = default;
};

// Lexicographically smallest vertex subset of g inducing the pattern, as a
// sorted vector, or nullopt. Deterministic.
std::optional<std::vector<int>> induced_contains(const Graph& g,
                                                 const PatternId& p);

struct ClassWitness {
  PatternId pattern;
  std::vector<int> vertices;
};

// In-class = (4K1, C4, P6)-free. Witness checked in order 4K1, C4, P6.
std::optional<ClassWitness> is_in_class(const Graph& g);

// Lexicographically smallest induced 6-cycle, returned in cyclic order
// starting at its smallest vertex and moving toward its smaller neighbour.
std::optional<std::array<int, 6>> find_c6(const Graph& g);

}  // namespace cw

#endif
