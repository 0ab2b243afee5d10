#ifndef CW_ORACLES_HPP
#define CW_ORACLES_HPP

#include <optional>
#include <utility>
#include <vector>

#include "cw/graph.hpp"
#include "cw/partition.hpp"
#include "cw/patterns.hpp"
#include "cw/term.hpp"

namespace cw {

// A size or state-space limit was exceeded; the caller should fall back to a
// different method or a smaller input.
class OracleLimit : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct Colouring {
  std::vector<int> assignment;  // vertex -> colour, 0-based
  int colours = 0;
};

bool is_proper(const Graph& g, const std::vector<int>& assignment);

struct CwdDecision {
  int width = 0;
  bool answer = false;
  std::optional<CwTerm> witness;  // present iff answer
};

// Exact decision "clique-width <= c" by exhaustive search over
// (vertex subset, label partition) states. Two vertices may share a label
// only while their neighbourhoods outside the subset coincide. Requires
// n <= 8 and c <= 4.
CwdDecision brute_cwd_at_most(const Graph& g, int c);

// Smallest c with brute_cwd_at_most(g, c).answer, scanning c = 1..max_c.
int brute_cwd_exact(const Graph& g, int max_c = 4);

// Optimal proper colouring by branch and bound (clique lower bound, greedy
// upper bound, vertices by decreasing degree). Requires n <= 30.
Colouring chromatic_number_exact(const Graph& g);

struct SimplicialStep {
  int vertex;
  int clique_bound;  // |N(x)| + 1 at removal time
};

struct SimplicialResult {
  Graph residual;               // induced on the surviving vertices
  std::vector<int> mapping;     // residual vertex -> original vertex
  std::vector<SimplicialStep> record;
};

// Repeatedly removes vertices whose remaining neighbourhood is a clique.
SimplicialResult simplicial_eliminate(const Graph& g);

// chi via the elimination record plus exact colouring of the residual.
Colouring chromatic_via_simplicial(const Graph& g);

struct TermColouring {
  bool feasible = false;
  std::vector<int> assignment;  // by vertex, -1 for absent, when feasible
};

// q-colourability decided by dynamic programming over the expression; each
// state is a map label -> set of colours used by that label class, deduped up
// to colour permutation, with one representative colouring carried along.
// Throws OracleLimit when a frame would exceed max_states.
TermColouring color_via_term(const CwTerm& t, int q, int max_states = 200000);

// Exhaustive search over all assignments of vertices to three (possibly
// empty) cliques. Requires n <= 12.
std::optional<VertexPartition> monotone_3clique_partition_exists(const Graph& g);

// Ground truth for induced_contains: subset-plus-bijection enumeration,
// lexicographically smallest witness. Requires n <= 12.
std::optional<std::vector<int>> naive_pattern_oracle(const Graph& g,
                                                     const PatternId& p);

}  // namespace cw

#endif
