#ifndef CW_TERM_HPP
#define CW_TERM_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cw/graph.hpp"
#include "cw/partition.hpp"

namespace cw {

// Stack-based clique-width expression: Create pushes a one-vertex labelled
// graph, Union pops two and pushes their disjoint union, Join/Relabel act on
// the stack top.
struct CwTerm {
  struct Create { int vertex; int label; };
  struct Union {};
  struct Join { int a; int b; };
  struct Relabel { int from; int to; };
  using Op = std::variant<Create, Union, Join, Relabel>;

  int label_budget = 0;
  std::vector<Op> ops;

  std::string to_json() const;
  static CwTerm from_json(const std::string& text);
};

struct LabelledGraph {
  Graph graph;              // on vertices 0..n-1 of the original universe
  std::vector<int> labels;  // -1 for vertices not present
  VertexSet present;

  int distinct_labels() const;
};

class TermError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Evaluates the term; throws TermError on stack underflow, equal-label join,
// out-of-budget label, duplicate vertex creation, or a stack that does not
// end with exactly one graph. `universe` sizes the vertex space (taken from
// the largest created vertex when 0).
LabelledGraph eval_term(const CwTerm& t, int universe = 0);

struct PeelStep {
  int vertex;
  int part;
  bool was_maximal;
  std::vector<int> complete_parts;  // parts complete to the vertex at its stage
};

struct PeelResult {
  bool success = false;
  std::vector<PeelStep> order;        // removal order
  std::optional<VertexSet> residual;  // where no extreme uniform vertex exists
};

// Greedy elimination: repeatedly remove an extreme vertex that is uniform to
// every other non-empty part, lowest vertex index first. Requires P monotone.
PeelResult peel(const Graph& g, const VertexPartition& P);

// Builds a term with label_budget = parts + 1 by replaying a successful peel
// in reverse. Label 0 is reserved for the vertex being inserted; part i gets
// label i + 1. Throws TermError if the peel gets stuck.
CwTerm build_term(const Graph& g, const VertexPartition& P);

struct VerifyResult {
  bool ok = false;
  int width_used = 0;
  std::vector<std::pair<int, int>> missing_edges;  // in g but not in the term
  std::vector<std::pair<int, int>> extra_edges;    // in the term but not in g
};

// Exact edge-set comparison of eval_term(t) against g (labels discarded).
VerifyResult verify_term(const CwTerm& t, const Graph& g);

}  // namespace cw

#endif
