#include "cw/partition.hpp"

#include <algorithm>
#include <numeric>

#include "cw/patterns.hpp"

namespace cw {

bool VertexPartition::is_valid_for(const Graph& g) const {
  VertexSet seen(g.vertex_count());
  for (const auto& p : parts) {
    if (p.universe() != g.vertex_count() && !p.empty()) return false;
    if (seen.intersects(p)) return false;
    seen |= p;
  }
  return seen == g.vertices();
}

VertexSet VertexPartition::complement_of(const Graph& g, int i) const {
  VertexSet out = g.vertices();
  out -= parts[i];
  return out;
}

VertexPartition VertexPartition::singletons(const Graph& g) {
  VertexPartition P;
  for (int v = 0; v < g.vertex_count(); ++v)
    P.add("v" + std::to_string(v), VertexSet::of(g.vertex_count(), {v}));
  return P;
}

namespace {

void require_disjoint(const VertexSet& X, const VertexSet& Y) {
  if (X.intersects(Y)) throw std::invalid_argument("sets overlap");
}

// X sorted by |N_Y| then vertex index
std::vector<int> sorted_by_degree_into(const Graph& g, const VertexSet& X,
                                       const VertexSet& Y) {
  std::vector<int> xs = X.to_vector();
  std::vector<int> deg(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i)
    deg[i] = g.neighbours_in(xs[i], Y).size();
  std::vector<std::size_t> idx(xs.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return deg[a] != deg[b] ? deg[a] < deg[b] : xs[a] < xs[b];
  });
  std::vector<int> out;
  out.reserve(xs.size());
  for (auto i : idx) out.push_back(xs[i]);
  return out;
}

}  // namespace

SetRelation relation_between(const Graph& g, const VertexSet& X,
                             const VertexSet& Y) {
  require_disjoint(X, Y);
  SetRelation r;
  if (X.empty() || Y.empty()) {
    r.uniformity = Uniformity::Anticomplete;
    r.vacuous = true;
    r.monotone = true;
    return r;
  }
  bool all = true, none = true;
  for (int x = X.first(); x >= 0 && (all || none); x = X.next(x)) {
    VertexSet nb = g.neighbours_in(x, Y);
    if (nb != Y) all = false;
    if (!nb.empty()) none = false;
  }
  r.uniformity = all   ? Uniformity::Complete
                 : none ? Uniformity::Anticomplete
                        : Uniformity::Mixed;
  r.monotone = r.uniform() || is_monotone_between(g, X, Y);
  return r;
}

bool is_monotone_between(const Graph& g, const VertexSet& X,
                         const VertexSet& Y) {
  return !crossing_witness(g, X, Y).has_value();
}

std::optional<CrossingWitness> crossing_witness(const Graph& g,
                                                const VertexSet& X,
                                                const VertexSet& Y) {
  require_disjoint(X, Y);
  auto order = sorted_by_degree_into(g, X, Y);
  for (std::size_t i = 0; i + 1 < order.size(); ++i) {
    int a = order[i], b = order[i + 1];
    VertexSet na = g.neighbours_in(a, Y);
    VertexSet nb = g.neighbours_in(b, Y);
    if (na.is_subset_of(nb)) continue;
    VertexSet only_a = na - nb;
    VertexSet only_b = nb - na;
    // |na| <= |nb| and na not nested in nb, so both differences are non-empty
    return CrossingWitness{a, b, only_a.first(), only_b.first()};
  }
  return std::nullopt;
}

std::vector<int> monotone_order(const Graph& g, const VertexSet& X,
                                const VertexSet& Y) {
  if (auto w = crossing_witness(g, X, Y))
    throw MonotoneError("sets are not monotone to each other", *w);
  return sorted_by_degree_into(g, X, Y);
}

MonotonePartitionVerdict is_monotone_partition(const Graph& g,
                                               const VertexPartition& P) {
  if (!P.is_valid_for(g)) throw std::invalid_argument("not a partition of V(G)");
  for (int i = 0; i < P.part_count(); ++i) {
    if (auto w = crossing_witness(g, P.parts[i], P.complement_of(g, i)))
      return {false, i, *w};
  }
  return {};
}

std::pair<VertexSet, VertexSet> extreme_vertices(const Graph& g,
                                                 const VertexPartition& P,
                                                 int i) {
  const VertexSet& part = P.parts[i];
  if (part.empty()) throw std::invalid_argument("empty part has no extreme vertices");
  VertexSet outside = P.complement_of(g, i);
  if (auto w = crossing_witness(g, part, outside))
    throw MonotoneError("part is not monotone to its complement", *w);
  auto order = sorted_by_degree_into(g, part, outside);
  int n = g.vertex_count();
  VertexSet maximal(n), minimal(n);
  VertexSet top = g.neighbours_in(order.back(), outside);
  VertexSet bottom = g.neighbours_in(order.front(), outside);
  for (int v : order) {
    VertexSet nb = g.neighbours_in(v, outside);
    if (nb == top) maximal.add(v);
    if (nb == bottom) minimal.add(v);
  }
  return {maximal, minimal};
}

Graph box_graph(const Graph& g, const VertexPartition& P) {
  if (!P.is_valid_for(g)) throw std::invalid_argument("not a partition of V(G)");
  int k = P.part_count();
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (!relation_between(g, P.parts[i], P.parts[j]).uniform())
        edges.emplace_back(i, j);
  return Graph::from_edges(k, edges);
}

bool is_forest(const Graph& b) {
  int k = b.vertex_count();
  std::vector<int> root(k);
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](int v) {
    while (root[v] != v) v = root[v] = root[root[v]];
    return v;
  };
  for (auto [u, v] : b.edges()) {
    int ru = find(u), rv = find(v);
    if (ru == rv) return false;
    root[ru] = rv;
  }
  return true;
}

HevVerdict hev_holds_brute(const Graph& g, const VertexPartition& P) {
  int n = g.vertex_count();
  if (n > 18) throw std::invalid_argument("brute-force hev check limited to n <= 18");
  auto verdict = is_monotone_partition(g, P);
  if (!verdict.ok) throw MonotoneError("partition is not monotone", *verdict.witness);

  std::vector<std::uint32_t> adj(n, 0);
  for (int v = 0; v < n; ++v)
    for (int u = g.neighbours(v).first(); u >= 0; u = g.neighbours(v).next(u))
      adj[v] |= std::uint32_t{1} << u;
  std::vector<std::uint32_t> parts;
  for (const auto& p : P.parts) {
    std::uint32_t m = 0;
    for (int v : p.to_vector()) m |= std::uint32_t{1} << v;
    parts.push_back(m);
  }

  for (std::uint32_t X = 1; X < (std::uint32_t{1} << n); ++X) {
    bool found = false;
    for (std::uint32_t pm : parts) {
      std::uint32_t members = pm & X;
      if (!members) continue;
      std::uint32_t outside = X & ~pm;
      // extreme = neighbourhood outside the part maximal or minimal by
      // inclusion among the part's members
      for (std::uint32_t mv = members; mv && !found; mv &= mv - 1) {
        int v = __builtin_ctz(mv);
        std::uint32_t nv = adj[v] & outside;
        bool is_max = true, is_min = true;
        for (std::uint32_t mu = members; mu; mu &= mu - 1) {
          std::uint32_t nu = adj[__builtin_ctz(mu)] & outside;
          if (nu != nv && (nv & ~nu) == 0) is_max = false;
          if (nu != nv && (nu & ~nv) == 0) is_min = false;
        }
        if (!is_max && !is_min) continue;
        bool uniform_all = true;
        for (std::uint32_t qm : parts) {
          if (qm == pm) continue;
          std::uint32_t q = qm & X;
          if (!q) continue;
          std::uint32_t a = adj[v] & q;
          if (a != 0 && a != q) {
            uniform_all = false;
            break;
          }
        }
        if (uniform_all) found = true;
      }
      if (found) break;
    }
    if (!found) {
      std::vector<int> subset;
      for (int v = 0; v < n; ++v)
        if ((X >> v) & 1) subset.push_back(v);
      return {false, subset};
    }
  }
  return {};
}

bool near_uniform_check(const Graph& g, const VertexPartition& P) {
  if (!P.is_valid_for(g)) throw std::invalid_argument("not a partition of V(G)");
  int k = P.part_count();
  for (const auto& p : P.parts)
    if (!g.is_clique(p)) return false;
  std::vector<int> degree(k, 0);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      if (relation_between(g, P.parts[i], P.parts[j]).uniform()) continue;
      ++degree[i];
      ++degree[j];
      if (degree[i] > 1 || degree[j] > 1) return false;
      Graph sub = g.induced(P.parts[i] | P.parts[j]);
      if (induced_contains(sub, PatternId{PatternId::Kind::C4, 0})) return false;
    }
  return true;
}

}  // namespace cw
