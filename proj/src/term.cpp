#include "cw/term.hpp"

#include <algorithm>

#include "json.hpp"

namespace cw {

namespace {

struct Frame {
  VertexSet present;
  std::vector<int> labels;            // by vertex, -1 when absent
  std::vector<VertexSet> rows;        // adjacency among present vertices

  explicit Frame(int universe)
      : present(universe), labels(universe, -1),
        rows(universe, VertexSet(universe)) {}
};

int max_created_vertex(const CwTerm& t) {
  int mx = -1;
  for (const auto& op : t.ops)
    if (auto* c = std::get_if<CwTerm::Create>(&op)) mx = std::max(mx, c->vertex);
  return mx;
}

void check_label(const CwTerm& t, int label) {
  if (label < 0 || label >= t.label_budget)
    throw TermError("label " + std::to_string(label) + " outside budget " +
                    std::to_string(t.label_budget));
}

}  // namespace

int LabelledGraph::distinct_labels() const {
  std::vector<int> seen;
  for (int v = present.first(); v >= 0; v = present.next(v))
    seen.push_back(labels[v]);
  std::sort(seen.begin(), seen.end());
  seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
  return static_cast<int>(seen.size());
}

LabelledGraph eval_term(const CwTerm& t, int universe) {
  int n = std::max(universe, max_created_vertex(t) + 1);
  if (t.ops.empty())
    return {Graph(std::max(universe, 0)), std::vector<int>(std::max(universe, 0), -1),
            VertexSet(std::max(universe, 0))};

  std::vector<Frame> stack;
  VertexSet created(n);
  for (const auto& op : t.ops) {
    if (auto* c = std::get_if<CwTerm::Create>(&op)) {
      check_label(t, c->label);
      if (c->vertex < 0 || c->vertex >= n || created.contains(c->vertex))
        throw TermError("vertex " + std::to_string(c->vertex) +
                        " created twice or out of range");
      created.add(c->vertex);
      Frame f(n);
      f.present.add(c->vertex);
      f.labels[c->vertex] = c->label;
      stack.push_back(std::move(f));
    } else if (std::get_if<CwTerm::Union>(&op)) {
      if (stack.size() < 2) throw TermError("union on a stack of fewer than two graphs");
      Frame b = std::move(stack.back());
      stack.pop_back();
      Frame& a = stack.back();
      a.present |= b.present;
      for (int v = b.present.first(); v >= 0; v = b.present.next(v)) {
        a.labels[v] = b.labels[v];
        a.rows[v] = b.rows[v];
      }
    } else if (auto* j = std::get_if<CwTerm::Join>(&op)) {
      check_label(t, j->a);
      check_label(t, j->b);
      if (j->a == j->b) throw TermError("join requires two distinct labels");
      if (stack.empty()) throw TermError("join on an empty stack");
      Frame& f = stack.back();
      VertexSet A(n), B(n);
      for (int v = f.present.first(); v >= 0; v = f.present.next(v)) {
        if (f.labels[v] == j->a) A.add(v);
        if (f.labels[v] == j->b) B.add(v);
      }
      for (int v = A.first(); v >= 0; v = A.next(v)) f.rows[v] |= B;
      for (int v = B.first(); v >= 0; v = B.next(v)) f.rows[v] |= A;
    } else if (auto* r = std::get_if<CwTerm::Relabel>(&op)) {
      check_label(t, r->from);
      check_label(t, r->to);
      if (stack.empty()) throw TermError("relabel on an empty stack");
      Frame& f = stack.back();
      for (int v = f.present.first(); v >= 0; v = f.present.next(v))
        if (f.labels[v] == r->from) f.labels[v] = r->to;
    }
  }
  if (stack.size() != 1)
    throw TermError("evaluation must end with exactly one graph, have " +
                    std::to_string(stack.size()));

  Frame& f = stack.back();
  std::vector<std::pair<int, int>> edges;
  for (int u = f.present.first(); u >= 0; u = f.present.next(u))
    for (int v = f.rows[u].next(u); v >= 0; v = f.rows[u].next(v))
      edges.emplace_back(u, v);
  return {Graph::from_edges(n, edges), f.labels, f.present};
}

PeelResult peel(const Graph& g, const VertexPartition& P) {
  auto mv = is_monotone_partition(g, P);
  if (!mv.ok) throw MonotoneError("partition is not monotone", *mv.witness);

  int n = g.vertex_count();
  int k = P.part_count();
  VertexSet residual = g.vertices();
  PeelResult res;

  while (!residual.empty()) {
    int best = -1;
    PeelStep best_step;
    for (int i = 0; i < k; ++i) {
      VertexSet members = P.parts[i] & residual;
      if (members.empty()) continue;
      VertexSet outside = residual - members;
      // restricted partition is still monotone, so the outside
      // neighbourhoods within a part form a chain: size extremes are
      // inclusion extremes
      int max_sz = -1, min_sz = n + 1;
      for (int v = members.first(); v >= 0; v = members.next(v)) {
        int sz = g.neighbours_in(v, outside).size();
        max_sz = std::max(max_sz, sz);
        min_sz = std::min(min_sz, sz);
      }
      for (int v = members.first(); v >= 0; v = members.next(v)) {
        if (best >= 0 && v > best) break;
        int sz = g.neighbours_in(v, outside).size();
        bool is_max = sz == max_sz, is_min = sz == min_sz;
        if (!is_max && !is_min) continue;
        bool uniform = true;
        for (int j = 0; j < k && uniform; ++j) {
          if (j == i) continue;
          VertexSet q = P.parts[j] & residual;
          if (q.empty()) continue;
          VertexSet a = g.neighbours_in(v, q);
          if (!a.empty() && a != q) uniform = false;
        }
        if (!uniform) continue;
        if (best < 0 || v < best) {
          best = v;
          best_step.vertex = v;
          best_step.part = i;
          best_step.was_maximal = is_max;
        }
      }
    }
    if (best < 0) {
      res.residual = residual;
      return res;
    }
    residual.remove(best);
    best_step.complete_parts.clear();
    for (int j = 0; j < k; ++j) {
      VertexSet q = P.parts[j] & residual;
      if (q.empty()) continue;
      if (q.is_subset_of(g.neighbours(best))) best_step.complete_parts.push_back(j);
    }
    res.order.push_back(best_step);
  }
  res.success = true;
  return res;
}

CwTerm build_term(const Graph& g, const VertexPartition& P) {
  PeelResult pr = peel(g, P);
  if (!pr.success)
    throw TermError("greedy peel stuck with " +
                    std::to_string(pr.residual->size()) + " vertices left");

  CwTerm t;
  t.label_budget = P.part_count() + 1;
  // construction replays the peel backwards; label 0 is reserved for the
  // vertex being inserted, part i owns label i + 1
  for (auto it = pr.order.rbegin(); it != pr.order.rend(); ++it) {
    const PeelStep& s = *it;
    if (it == pr.order.rbegin()) {
      t.ops.push_back(CwTerm::Create{s.vertex, s.part + 1});
      continue;
    }
    t.ops.push_back(CwTerm::Create{s.vertex, 0});
    t.ops.push_back(CwTerm::Union{});
    for (int j : s.complete_parts) t.ops.push_back(CwTerm::Join{0, j + 1});
    t.ops.push_back(CwTerm::Relabel{0, s.part + 1});
  }
  return t;
}

VerifyResult verify_term(const CwTerm& t, const Graph& g) {
  LabelledGraph lg = eval_term(t, g.vertex_count());
  VerifyResult r;
  r.width_used = lg.distinct_labels();
  if (lg.present != g.vertices() || lg.graph.vertex_count() != g.vertex_count()) {
    r.ok = false;
    for (auto e : g.edges()) r.missing_edges.push_back(e);
    return r;
  }
  for (auto [u, v] : g.edges())
    if (!lg.graph.adjacent(u, v)) r.missing_edges.emplace_back(u, v);
  for (auto [u, v] : lg.graph.edges())
    if (!g.adjacent(u, v)) r.extra_edges.emplace_back(u, v);
  r.ok = r.missing_edges.empty() && r.extra_edges.empty();
  return r;
}

std::string CwTerm::to_json() const {
  nlohmann::json j;
  j["budget"] = label_budget;
  j["ops"] = nlohmann::json::array();
  for (const auto& op : ops) {
    nlohmann::json o;
    if (auto* c = std::get_if<Create>(&op))
      o = {{"op", "create"}, {"v", c->vertex}, {"label", c->label}};
    else if (std::get_if<Union>(&op))
      o = {{"op", "union"}};
    else if (auto* jn = std::get_if<Join>(&op))
      o = {{"op", "join"}, {"a", jn->a}, {"b", jn->b}};
    else if (auto* r = std::get_if<Relabel>(&op))
      o = {{"op", "relabel"}, {"from", r->from}, {"to", r->to}};
    j["ops"].push_back(o);
  }
  return j.dump();
}

CwTerm CwTerm::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  CwTerm t;
  t.label_budget = j.at("budget").get<int>();
  for (const auto& o : j.at("ops")) {
    std::string kind = o.at("op").get<std::string>();
    if (kind == "create")
      t.ops.push_back(Create{o.at("v").get<int>(), o.at("label").get<int>()});
    else if (kind == "union")
      t.ops.push_back(Union{});
    else if (kind == "join")
      t.ops.push_back(Join{o.at("a").get<int>(), o.at("b").get<int>()});
    else if (kind == "relabel")
      t.ops.push_back(Relabel{o.at("from").get<int>(), o.at("to").get<int>()});
    else
      throw TermError("unknown op '" + kind + "'");
  }
  return t;
}

}  // namespace cw
