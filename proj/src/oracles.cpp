#include "cw/oracles.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <unordered_map>

namespace cw {

bool is_proper(const Graph& g, const std::vector<int>& assignment) {
  if (static_cast<int>(assignment.size()) != g.vertex_count()) return false;
  for (auto [u, v] : g.edges())
    if (assignment[u] == assignment[v]) return false;
  return true;
}

// ---------------------------------------------------------------------------
// exact clique-width

namespace {

// Search state: a vertex subset together with a partition of it into label
// classes (canonically numbered by first occurrence). Two vertices may share
// a class only while their neighbourhoods outside the subset coincide —
// later operations cannot tell them apart, so a mismatch can never be fixed.
struct CwState {
  std::uint16_t mask = 0;
  std::array<std::int8_t, 8> cls{};  // class id per vertex, -1 outside
  int k = 0;                         // class count

  enum Kind { Base, Merge, Un } kind = Base;
  int base_vertex = -1;
  int parent = -1, merge_a = -1, merge_b = -1;  // Merge: classes of parent
  int left = -1, right = -1;                    // Un
  std::vector<std::pair<int, int>> joins;       // Un: child-class pairs
};

struct CwSearch {
  const Graph& g;
  int n, c;
  std::uint16_t full;
  std::array<std::uint16_t, 8> adj{};
  std::vector<CwState> states;
  std::unordered_map<std::uint32_t, int> index;
  std::vector<std::vector<int>> by_mask;

  CwSearch(const Graph& graph, int budget)
      : g(graph), n(graph.vertex_count()), c(budget),
        full(static_cast<std::uint16_t>((1u << n) - 1)), by_mask(1u << n) {
    for (int v = 0; v < n; ++v)
      for (int u = 0; u < n; ++u)
        if (g.adjacent(u, v)) adj[v] |= std::uint16_t(1) << u;
  }

  static std::uint32_t key_of(std::uint16_t mask,
                              const std::array<std::int8_t, 8>& cls) {
    std::uint32_t key = mask;
    int shift = 8;
    for (int v = 0; v < 8; ++v)
      if (mask >> v & 1) {
        key |= std::uint32_t(cls[v]) << shift;
        shift += 2;
      }
    return key;
  }

  // canonical renumbering; rejects states whose same-class vertices differ
  // outside the subset (unless the subset is everything)
  bool admit(CwState s) {
    std::array<std::int8_t, 8> canon;
    canon.fill(-1);
    std::array<std::int8_t, 8> rename;
    rename.fill(-1);
    int next = 0;
    std::array<std::uint16_t, 8> outside;
    for (int v = 0; v < n; ++v) {
      if (!(s.mask >> v & 1)) continue;
      int old = s.cls[v];
      if (rename[old] < 0) {
        rename[old] = static_cast<std::int8_t>(next);
        outside[next] = adj[v] & ~s.mask;
        ++next;
      } else if (s.mask != full &&
                 outside[rename[old]] != (adj[v] & ~s.mask)) {
        return false;
      }
      canon[v] = rename[old];
    }
    s.cls = canon;
    s.k = next;
    if (s.kind == CwState::Un)
      for (auto& [a, b] : s.joins) {
        a = rename[a];
        b = rename[b];
      }
    if (s.kind == CwState::Merge) {
      // remap merge classes through nothing: they index the parent
    }
    std::uint32_t key = key_of(s.mask, s.cls);
    if (index.count(key)) return false;
    index[key] = static_cast<int>(states.size());
    by_mask[s.mask].push_back(static_cast<int>(states.size()));
    states.push_back(std::move(s));
    return true;
  }

  void close_merges(std::uint16_t mask) {
    // worklist over states of this mask: every pair of classes may be merged
    for (std::size_t idx = 0; idx < by_mask[mask].size(); ++idx) {
      int si = by_mask[mask][idx];
      int k = states[si].k;
      for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b) {
          CwState child;
          child.mask = mask;
          child.cls = states[si].cls;
          for (int v = 0; v < n; ++v)
            if (child.cls[v] == b) child.cls[v] = static_cast<std::int8_t>(a);
          child.kind = CwState::Merge;
          child.parent = si;
          child.merge_a = a;
          child.merge_b = b;
          admit(std::move(child));
        }
    }
  }

  // cross relation between class A of the left state and class B of the
  // right state: 1 complete, 0 anticomplete, -1 mixed
  int cross(std::uint16_t amask, std::uint16_t bmask) const {
    int seen = -2;
    for (int v = 0; v < n; ++v) {
      if (!(amask >> v & 1)) continue;
      std::uint16_t hit = adj[v] & bmask;
      int kind = hit == bmask ? 1 : hit == 0 ? 0 : -1;
      if (kind == -1) return -1;
      if (seen == -2) seen = kind;
      else if (seen != kind) return -1;
    }
    return seen == -2 ? 0 : seen;
  }

  void try_union(int li, int ri) {
    const CwState& L = states[li];
    const CwState& R = states[ri];
    int k1 = L.k, k2 = R.k;
    std::array<std::uint16_t, 8> cmask{};  // vertices of each combined class
    for (int v = 0; v < n; ++v) {
      if (L.mask >> v & 1) cmask[L.cls[v]] |= std::uint16_t(1) << v;
      if (R.mask >> v & 1) cmask[k1 + R.cls[v]] |= std::uint16_t(1) << v;
    }
    int m = k1 + k2;

    // cross relation per (left class, right class)
    std::array<std::array<int, 8>, 8> rel{};
    for (int a = 0; a < k1; ++a)
      for (int b = 0; b < k2; ++b)
        rel[a][b] = cross(cmask[a], cmask[k1 + b]);

    if (m <= c) {
      // keep every class its own label; coarsenings follow by merges
      bool ok = true;
      CwState child;
      for (int a = 0; a < k1 && ok; ++a)
        for (int b = 0; b < k2 && ok; ++b) {
          if (rel[a][b] == -1) ok = false;
          else if (rel[a][b] == 1) child.joins.emplace_back(a, k1 + b);
        }
      if (ok) {
        child.mask = L.mask | R.mask;
        for (int v = 0; v < n; ++v) {
          child.cls[v] = -1;
          if (L.mask >> v & 1) child.cls[v] = L.cls[v];
          if (R.mask >> v & 1) child.cls[v] = static_cast<std::int8_t>(k1 + R.cls[v]);
        }
        child.kind = CwState::Un;
        child.left = li;
        child.right = ri;
        admit(std::move(child));
      }
      return;
    }

    // too many classes for separate labels: enumerate groupings into <= c
    // groups (restricted growth strings); a shared label means the classes
    // are indistinguishable from the union onwards
    std::array<int, 16> group{};
    enumerate_groupings(li, ri, rel, cmask, k1, m, group, 0, 0);
  }

  void enumerate_groupings(int li, int ri,
                           const std::array<std::array<int, 8>, 8>& rel,
                           const std::array<std::uint16_t, 8>& cmask, int k1,
                           int m, std::array<int, 16>& group, int pos,
                           int used) {
    if (pos == m) {
      finish_grouping(li, ri, rel, cmask, k1, m, group, used);
      return;
    }
    int lim = std::min(used + 1, c);
    for (int gid = 0; gid < lim; ++gid) {
      group[pos] = gid;
      enumerate_groupings(li, ri, rel, cmask, k1, m, group, pos + 1,
                          std::max(used, gid + 1));
    }
  }

  void finish_grouping(int li, int ri,
                       const std::array<std::array<int, 8>, 8>& rel,
                       const std::array<std::uint16_t, 8>& cmask, int k1,
                       int m, const std::array<int, 16>& group, int used) {
    const CwState& L = states[li];
    const CwState& R = states[ri];
    // cross relation must be constant per group pair; same-group cross pairs
    // can never be joined, so they must be non-edges; joining a group pair
    // also forces every same-side pair between them, which must then already
    // be an edge of both sides
    std::array<std::array<int, 8>, 8> grel;
    for (auto& row : grel) row.fill(-2);
    for (int a = 0; a < k1; ++a)
      for (int b = 0; b < m - k1; ++b) {
        int ga = group[a], gb = group[k1 + b], r = rel[a][b];
        if (r == -1) return;
        if (ga == gb) {
          if (r != 0) return;
          continue;
        }
        int lo = std::min(ga, gb), hi = std::max(ga, gb);
        if (grel[lo][hi] == -2) grel[lo][hi] = r;
        else if (grel[lo][hi] != r) return;
      }
    std::vector<std::pair<int, int>> joins;
    for (int lo = 0; lo < used; ++lo)
      for (int hi = lo + 1; hi < used; ++hi) {
        if (grel[lo][hi] != 1) continue;
        // same-side completeness between the two groups
        std::uint16_t glo = 0, ghi = 0;
        for (int t = 0; t < m; ++t) {
          if (group[t] == lo) glo |= cmask[t];
          if (group[t] == hi) ghi |= cmask[t];
        }
        for (std::uint16_t side : {L.mask, R.mask}) {
          std::uint16_t x = glo & side, y = ghi & side;
          for (int v = 0; v < n; ++v)
            if (x >> v & 1)
              if ((adj[v] & y) != (y & ~(std::uint16_t(1) << v))) return;
        }
        joins.emplace_back(lo, hi);
      }
    CwState child;
    child.mask = L.mask | R.mask;
    for (int v = 0; v < n; ++v) {
      child.cls[v] = -1;
      if (L.mask >> v & 1) child.cls[v] = static_cast<std::int8_t>(group[L.cls[v]]);
      if (R.mask >> v & 1)
        child.cls[v] = static_cast<std::int8_t>(group[k1 + R.cls[v]]);
    }
    child.kind = CwState::Un;
    child.left = li;
    child.right = ri;
    child.joins = std::move(joins);
    admit(std::move(child));
  }

  // reconstructs a term for state si whose final labelling maps canonical
  // class i to labmap[i] (injective)
  void emit(int si, const std::array<int, 8>& labmap,
            std::vector<CwTerm::Op>& ops) const {
    const CwState& s = states[si];
    if (s.kind == CwState::Base) {
      ops.push_back(CwTerm::Create{s.base_vertex, labmap[0]});
      return;
    }
    if (s.kind == CwState::Merge) {
      const CwState& p = states[s.parent];
      // child class of each parent class
      std::array<int, 8> child_of{};
      for (int v = 0; v < n; ++v)
        if (s.mask >> v & 1) child_of[p.cls[v]] = s.cls[v];
      std::array<int, 8> pmap{};
      std::array<bool, 8> taken{};
      for (int pc = 0; pc < p.k; ++pc)
        if (pc != s.merge_b) {
          pmap[pc] = labmap[child_of[pc]];
          taken[pmap[pc]] = true;
        }
      int free_label = 0;
      while (taken[free_label]) ++free_label;
      pmap[s.merge_b] = free_label;
      emit(s.parent, pmap, ops);
      ops.push_back(CwTerm::Relabel{free_label, labmap[child_of[s.merge_a]]});
      return;
    }

    const CwState& L = states[s.left];
    const CwState& R = states[s.right];
    // target (group) label of every side class
    std::array<int, 8> lgoal{}, rgoal{};
    for (int v = 0; v < n; ++v) {
      if (L.mask >> v & 1) lgoal[L.cls[v]] = labmap[s.cls[v]];
      if (R.mask >> v & 1) rgoal[R.cls[v]] = labmap[s.cls[v]];
    }
    auto side = [&](int state_idx, int k, const std::array<int, 8>& goal) {
      // first class of each shared label keeps it; later ones build under a
      // temporary label and are relabelled into place
      std::array<int, 8> build{};
      std::array<bool, 8> taken{};
      std::vector<int> pending;
      for (int cl = 0; cl < k; ++cl) {
        bool seen = false;
        for (int before = 0; before < cl; ++before)
          if (goal[before] == goal[cl]) seen = true;
        if (!seen) {
          build[cl] = goal[cl];
          taken[goal[cl]] = true;
        } else {
          pending.push_back(cl);
        }
      }
      for (int cl : pending) {
        int f = 0;
        while (taken[f]) ++f;
        build[cl] = f;
        taken[f] = true;
      }
      emit(state_idx, build, ops);
      for (int cl : pending) ops.push_back(CwTerm::Relabel{build[cl], goal[cl]});
    };
    side(s.left, L.k, lgoal);
    side(s.right, R.k, rgoal);
    ops.push_back(CwTerm::Union{});
    for (auto [a, b] : s.joins)
      ops.push_back(CwTerm::Join{labmap[a], labmap[b]});
  }
};

}  // namespace

CwdDecision brute_cwd_at_most(const Graph& g, int c) {
  int n = g.vertex_count();
  if (n > 8) throw OracleLimit("clique-width oracle limited to 8 vertices");
  if (c < 1 || c > 4) throw OracleLimit("clique-width oracle limited to 4 labels");

  CwdDecision d;
  d.width = c;
  if (n == 0) {
    d.answer = true;
    d.witness = CwTerm{c, {}};
    return d;
  }

  CwSearch search(g, c);
  for (int v = 0; v < n; ++v) {
    CwState s;
    s.mask = std::uint16_t(1) << v;
    s.cls.fill(-1);
    s.cls[v] = 0;
    s.kind = CwState::Base;
    s.base_vertex = v;
    search.admit(std::move(s));
  }
  for (std::uint16_t v = 0; v < n; ++v) search.close_merges(std::uint16_t(1) << v);

  std::vector<std::uint16_t> masks;
  for (std::uint32_t m = 1; m <= search.full; ++m)
    if (__builtin_popcount(m) >= 2) masks.push_back(static_cast<std::uint16_t>(m));
  std::sort(masks.begin(), masks.end(), [](std::uint16_t a, std::uint16_t b) {
    int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
    return pa != pb ? pa < pb : a < b;
  });

  for (std::uint16_t mask : masks) {
    std::uint16_t low = mask & (~mask + 1);
    for (std::uint16_t sub = (mask - 1) & mask; sub; sub = (sub - 1) & mask) {
      if (!(sub & low)) continue;
      std::uint16_t other = mask ^ sub;
      if (!other) continue;
      for (int li : search.by_mask[sub])
        for (int ri : search.by_mask[other]) search.try_union(li, ri);
    }
    search.close_merges(mask);
  }

  if (search.by_mask[search.full].empty()) return d;
  d.answer = true;
  int win = search.by_mask[search.full].front();
  std::array<int, 8> labmap{};
  std::iota(labmap.begin(), labmap.end(), 0);
  CwTerm t;
  t.label_budget = c;
  search.emit(win, labmap, t.ops);
  d.witness = std::move(t);
  return d;
}

int brute_cwd_exact(const Graph& g, int max_c) {
  for (int c = 1; c <= max_c; ++c)
    if (brute_cwd_at_most(g, c).answer) return c;
  throw OracleLimit("clique-width exceeds the oracle's label limit");
}

// ---------------------------------------------------------------------------
// colouring

namespace {

struct ColourSearch {
  const Graph& g;
  std::vector<int> order;     // vertices, degree descending
  std::vector<int> colour;    // by position in order
  std::vector<int>& best_assignment;
  int best;

  void branch(int pos, int used) {
    if (used >= best) return;
    if (pos == static_cast<int>(order.size())) {
      best = used;
      best_assignment.assign(g.vertex_count(), 0);
      for (std::size_t i = 0; i < order.size(); ++i)
        best_assignment[order[i]] = colour[i];
      return;
    }
    int v = order[pos];
    int lim = std::min(used + 1, best - 1) ;
    for (int col = 0; col < lim; ++col) {
      bool ok = true;
      for (int i = 0; i < pos && ok; ++i)
        if (colour[i] == col && g.adjacent(order[i], v)) ok = false;
      if (!ok) continue;
      colour[pos] = col;
      branch(pos + 1, std::max(used, col + 1));
    }
    colour[pos] = -1;
  }
};

}  // namespace

Colouring chromatic_number_exact(const Graph& g) {
  int n = g.vertex_count();
  if (n > 30) throw OracleLimit("exact colouring limited to 30 vertices");
  Colouring res;
  res.assignment.assign(n, 0);
  if (n == 0) return res;

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    int da = g.neighbours(a).size(), db = g.neighbours(b).size();
    return da != db ? da > db : a < b;
  });

  // greedy upper bound along the same order
  std::vector<int> greedy(n, -1);
  int ub = 0;
  for (int v : order) {
    std::uint64_t used = 0;
    for (int u = g.neighbours(v).first(); u >= 0; u = g.neighbours(v).next(u))
      if (greedy[u] >= 0) used |= std::uint64_t(1) << greedy[u];
    int col = 0;
    while (used >> col & 1) ++col;
    greedy[v] = col;
    ub = std::max(ub, col + 1);
  }

  // greedy maximal clique as a lower bound
  VertexSet clique(n);
  for (int v : order) {
    bool fits = true;
    for (int u = clique.first(); u >= 0 && fits; u = clique.next(u))
      fits = g.adjacent(u, v);
    if (fits) clique.add(v);
  }
  int lb = clique.size();

  if (lb == ub) {
    res.assignment = greedy;
    res.colours = ub;
    return res;
  }

  std::vector<int> best_assignment = greedy;
  ColourSearch s{g, order, std::vector<int>(n, -1), best_assignment, ub + 1};
  s.branch(0, 0);
  res.assignment = best_assignment;
  res.colours = std::min(s.best, ub);
  if (res.colours == ub + 1) {
    res.assignment = greedy;
    res.colours = ub;
  }
  return res;
}

SimplicialResult simplicial_eliminate(const Graph& g) {
  int n = g.vertex_count();
  VertexSet alive = g.vertices();
  SimplicialResult res;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = alive.first(); v >= 0; v = alive.next(v)) {
      VertexSet nb = g.neighbours_in(v, alive);
      if (!g.is_clique(nb)) continue;
      res.record.push_back({v, nb.size() + 1});
      alive.remove(v);
      changed = true;
    }
  }
  res.residual = g.induced(alive, &res.mapping);
  return res;
}

Colouring chromatic_via_simplicial(const Graph& g) {
  SimplicialResult s = simplicial_eliminate(g);
  Colouring base = chromatic_number_exact(s.residual);

  Colouring res;
  res.assignment.assign(g.vertex_count(), 0);
  for (std::size_t i = 0; i < s.mapping.size(); ++i)
    res.assignment[s.mapping[i]] = base.assignment[i];
  res.colours = base.colours;
  for (const auto& step : s.record)
    res.colours = std::max(res.colours, step.clique_bound);
  // colour the eliminated vertices back in reverse order; the clique
  // neighbourhood always leaves a colour free
  for (auto it = s.record.rbegin(); it != s.record.rend(); ++it) {
    std::uint64_t used = 0;
    VertexSet nb = g.neighbours(it->vertex);
    for (int u = nb.first(); u >= 0; u = nb.next(u)) {
      // vertices eliminated earlier have not been coloured yet
      bool waiting = false;
      for (auto jt = it + 1; jt != s.record.rend(); ++jt)
        if (jt->vertex == u) waiting = true;
      if (waiting) continue;
      used |= std::uint64_t(1) << res.assignment[u];
    }
    int col = 0;
    while (used >> col & 1) ++col;
    res.assignment[it->vertex] = col;
    res.colours = std::max(res.colours, col + 1);
  }
  return res;
}

// ---------------------------------------------------------------------------
// q-colourability over a term

namespace {

struct TermState {
  std::vector<std::uint32_t> masks;  // colours used per label
  std::vector<std::int8_t> colour;   // representative, by vertex
};

// canonical key up to colour permutation: the multiset of per-colour
// label signatures
std::vector<std::uint32_t> state_key(const TermState& s, int q) {
  std::vector<std::uint32_t> sigs(q, 0);
  for (std::size_t l = 0; l < s.masks.size(); ++l)
    for (int col = 0; col < q; ++col)
      if (s.masks[l] >> col & 1) sigs[col] |= std::uint32_t(1) << l;
  std::sort(sigs.begin(), sigs.end());
  return sigs;
}

struct TermFrame {
  std::vector<TermState> states;
  std::map<std::vector<std::uint32_t>, int> seen;

  void insert(TermState s, int q, int max_states) {
    auto key = state_key(s, q);
    if (seen.count(key)) return;
    if (static_cast<int>(states.size()) >= max_states)
      throw OracleLimit("term colouring state budget exceeded");
    seen[key] = static_cast<int>(states.size());
    states.push_back(std::move(s));
  }
};

}  // namespace

TermColouring color_via_term(const CwTerm& t, int q, int max_states) {
  if (q < 0 || q > 31) throw OracleLimit("colour count out of range");
  TermColouring out;
  if (t.ops.empty()) {
    out.feasible = true;
    return out;
  }
  int n = 0;
  for (const auto& op : t.ops)
    if (auto* c = std::get_if<CwTerm::Create>(&op)) n = std::max(n, c->vertex + 1);
  int budget = t.label_budget;
  if (budget > 31) throw OracleLimit("label budget out of range");

  std::vector<TermFrame> stack;
  for (const auto& op : t.ops) {
    if (auto* c = std::get_if<CwTerm::Create>(&op)) {
      TermFrame f;
      if (q >= 1) {
        TermState s;
        s.masks.assign(budget, 0);
        s.colour.assign(n, -1);
        s.masks[c->label] = 1;  // colour 0, others by symmetry
        s.colour[c->vertex] = 0;
        f.insert(std::move(s), q, max_states);
      }
      stack.push_back(std::move(f));
    } else if (std::get_if<CwTerm::Union>(&op)) {
      TermFrame b = std::move(stack.back());
      stack.pop_back();
      TermFrame a = std::move(stack.back());
      stack.pop_back();
      TermFrame merged;
      for (const TermState& sa : a.states)
        for (const TermState& sb : b.states) {
          // remap the colours of the right state injectively; only colours
          // it actually uses matter
          std::vector<int> used;
          std::uint32_t all = 0;
          for (auto m : sb.masks) all |= m;
          for (int col = 0; col < q; ++col)
            if (all >> col & 1) used.push_back(col);
          std::vector<int> map(q, -1);
          std::vector<bool> taken(q, false);
          auto assign = [&](auto&& self, std::size_t i) -> void {
            if (i == used.size()) {
              TermState s;
              s.masks = sa.masks;
              s.colour = sa.colour;
              for (int l = 0; l < budget; ++l)
                for (int col : used)
                  if (sb.masks[l] >> col & 1)
                    s.masks[l] |= std::uint32_t(1) << map[col];
              for (int v = 0; v < n; ++v)
                if (sb.colour[v] >= 0) s.colour[v] = static_cast<std::int8_t>(map[sb.colour[v]]);
              merged.insert(std::move(s), q, max_states);
              return;
            }
            for (int target = 0; target < q; ++target) {
              if (taken[target]) continue;
              taken[target] = true;
              map[used[i]] = target;
              self(self, i + 1);
              taken[target] = false;
            }
          };
          assign(assign, 0);
        }
      stack.push_back(std::move(merged));
    } else if (auto* j = std::get_if<CwTerm::Join>(&op)) {
      TermFrame& f = stack.back();
      TermFrame kept;
      for (TermState& s : f.states)
        if ((s.masks[j->a] & s.masks[j->b]) == 0)
          kept.insert(std::move(s), q, max_states);
      f = std::move(kept);
    } else if (auto* r = std::get_if<CwTerm::Relabel>(&op)) {
      TermFrame& f = stack.back();
      if (r->from != r->to) {
        TermFrame next;
        for (TermState& s : f.states) {
          s.masks[r->to] |= s.masks[r->from];
          s.masks[r->from] = 0;
          next.insert(std::move(s), q, max_states);
        }
        f = std::move(next);
      }
    }
  }
  if (stack.size() != 1) throw TermError("term does not evaluate to one graph");
  if (stack.back().states.empty()) return out;
  out.feasible = true;
  const TermState& win = stack.back().states.front();
  out.assignment.assign(n, -1);
  for (int v = 0; v < n; ++v) out.assignment[v] = win.colour[v];
  return out;
}

// ---------------------------------------------------------------------------
// exhaustive searches

std::optional<VertexPartition> monotone_3clique_partition_exists(const Graph& g) {
  int n = g.vertex_count();
  if (n > 12) throw OracleLimit("3-clique search limited to 12 vertices");

  std::vector<int> assign(n, 0);
  long total = 1;
  for (int i = 0; i < n; ++i) total *= 3;
  for (long code = 0; code < total; ++code) {
    long c = code;
    int high = 0;  // canonical: first vertex in part 0, parts first-used in order
    bool canonical = true;
    for (int v = 0; v < n; ++v) {
      assign[v] = c % 3;
      c /= 3;
      if (assign[v] > high) canonical = false;
      else if (assign[v] == high) ++high;
    }
    if (!canonical) continue;

    VertexPartition P;
    for (int i = 0; i < 3; ++i) P.add("Q" + std::to_string(i + 1), VertexSet(n));
    for (int v = 0; v < n; ++v) P.parts[assign[v]].add(v);
    bool cliques = true;
    for (int i = 0; i < 3 && cliques; ++i) cliques = g.is_clique(P.parts[i]);
    if (!cliques) continue;
    if (is_monotone_partition(g, P).ok) return P;
  }
  return std::nullopt;
}

std::optional<std::vector<int>> naive_pattern_oracle(const Graph& g,
                                                     const PatternId& p) {
  int n = g.vertex_count();
  if (n > 12) throw OracleLimit("naive pattern oracle limited to 12 vertices");
  int k = p.order();
  if (k > n) return std::nullopt;
  Graph pat = p.graph();

  std::vector<int> pick(k);
  std::iota(pick.begin(), pick.end(), 0);
  std::vector<int> perm(k);
  while (true) {
    std::iota(perm.begin(), perm.end(), 0);
    do {
      bool iso = true;
      for (int a = 0; a < k && iso; ++a)
        for (int b = a + 1; b < k && iso; ++b)
          if (pat.adjacent(a, b) != g.adjacent(pick[perm[a]], pick[perm[b]]))
            iso = false;
      if (iso) return pick;
    } while (std::next_permutation(perm.begin(), perm.end()));

    // next k-combination in lexicographic order
    int i = k - 1;
    while (i >= 0 && pick[i] == n - k + i) --i;
    if (i < 0) return std::nullopt;
    ++pick[i];
    for (int t = i + 1; t < k; ++t) pick[t] = pick[t - 1] + 1;
  }
}

}  // namespace cw
