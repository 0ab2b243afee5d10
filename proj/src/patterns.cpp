#include "cw/patterns.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <unordered_set>

namespace cw {

namespace {

std::vector<std::pair<int, int>> pattern_edges(const PatternId& p) {
  using K = PatternId::Kind;
  switch (p.kind) {
    case K::FourK1:
      return {};
    case K::C4:
      return {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
    case K::P6:
      return {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}};
    case K::C6:
      return {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}};
    case K::K4:
      return {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    case K::Diamond:
      return {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}};
    case K::Paw:
      return {{0, 1}, {0, 2}, {1, 2}, {2, 3}};
    case K::Claw:
      return {{0, 1}, {0, 2}, {0, 3}};
    case K::CoDiamond:
      return {{0, 1}};
    case K::TwoK2:
      return {{0, 1}, {2, 3}};
    case K::CoPaw:
      return {{0, 1}, {1, 2}};
    case K::CoClaw:
      return {{0, 1}, {0, 2}, {1, 2}};
    case K::P4:
      return {{0, 1}, {1, 2}, {2, 3}};
    case K::Cycle: {
      std::vector<std::pair<int, int>> e;
      for (int i = 0; i < p.k; ++i) e.emplace_back(i, (i + 1) % p.k);
      return e;
    }
    case K::Path: {
      std::vector<std::pair<int, int>> e;
      for (int i = 0; i + 1 < p.k; ++i) e.emplace_back(i, i + 1);
      return e;
    }
  }
  return {};
}

// Prefix codes of the pattern under every vertex ordering: code of a prefix
// v_1..v_d packs the adjacency bits of all pairs, appended row by row. A
// partial subset of g can extend to a witness only if its code appears here.
struct Matcher {
  int order;
  std::vector<std::unordered_set<std::uint64_t>> prefixes;  // by depth

  explicit Matcher(const Graph& pat) : order(pat.vertex_count()) {
    prefixes.resize(order + 1);
    std::vector<int> perm(order);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::uint64_t code = 0;
      int bit = 0;
      prefixes[0].insert(0);
      for (int d = 1; d <= order; ++d) {
        for (int i = 0; i < d - 1; ++i, ++bit)
          if (pat.adjacent(perm[i], perm[d - 1])) code |= std::uint64_t{1} << bit;
        prefixes[d].insert(code);
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
};

bool search(const Graph& g, const Matcher& m, std::vector<int>& chosen,
            std::uint64_t code, int bit) {
  int d = static_cast<int>(chosen.size());
  if (d == m.order) return true;
  int start = chosen.empty() ? 0 : chosen.back() + 1;
  for (int v = start; v < g.vertex_count(); ++v) {
    std::uint64_t nc = code;
    for (int i = 0; i < d; ++i)
      if (g.adjacent(chosen[i], v)) nc |= std::uint64_t{1} << (bit + i);
    if (!m.prefixes[d + 1].count(nc)) continue;
    chosen.push_back(v);
    if (search(g, m, chosen, nc, bit + d)) return true;
    chosen.pop_back();
  }
  return false;
}

// Induced path/cycle search for orders too large for the permutation table.
// Grows ordered induced paths; deterministic (smallest start, smallest next).
bool long_path_search(const Graph& g, int k, bool cycle, std::vector<int>& seq,
                      VertexSet& used) {
  int d = static_cast<int>(seq.size());
  if (d == k) return !cycle || g.adjacent(seq.front(), seq.back());
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (used.contains(v)) continue;
    if (d > 0) {
      if (!g.adjacent(seq.back(), v)) continue;
      bool ok = true;
      for (int i = 0; i + 1 < d && ok; ++i) {
        bool closing = cycle && i == 0 && d == k - 1;
        if (g.adjacent(seq[i], v) != closing) ok = false;
      }
      if (!ok) continue;
    }
    seq.push_back(v);
    used.add(v);
    if (long_path_search(g, k, cycle, seq, used)) return true;
    used.remove(v);
    seq.pop_back();
  }
  return false;
}

}  // namespace

int PatternId::order() const {
  using K = Kind;
  switch (kind) {
    case K::P6:
    case K::C6:
      return 6;
    case K::Cycle:
    case K::Path:
      return k;
    default:
      return 4;
  }
}

std::string PatternId::name() const {
  using K = Kind;
  switch (kind) {
    case K::FourK1: return "4K1";
    case K::C4: return "C4";
    case K::P6: return "P6";
    case K::C6: return "C6";
    case K::K4: return "K4";
    case K::Diamond: return "diamond";
    case K::Paw: return "paw";
    case K::Claw: return "claw";
    case K::CoDiamond: return "co-diamond";
    case K::TwoK2: return "2K2";
    case K::CoPaw: return "co-paw";
    case K::CoClaw: return "co-claw";
    case K::P4: return "P4";
    case K::Cycle: return "C" + std::to_string(k);
    case K::Path: return "P" + std::to_string(k);
  }
  return "?";
}

Graph PatternId::graph() const {
  return Graph::from_edges(order(), pattern_edges(*this));
}

std::optional<std::vector<int>> induced_contains(const Graph& g,
                                                 const PatternId& p) {
  int k = p.order();
  if (k > g.vertex_count() || k <= 0) return std::nullopt;
  if (k <= 8) {
    Matcher m(p.graph());
    std::vector<int> chosen;
    chosen.reserve(k);
    if (search(g, m, chosen, 0, 0)) return chosen;
    return std::nullopt;
  }
  bool cycle = p.kind == PatternId::Kind::Cycle;
  std::vector<int> seq;
  VertexSet used(g.vertex_count());
  if (long_path_search(g, k, cycle, seq, used)) {
    std::sort(seq.begin(), seq.end());
    return seq;
  }
  return std::nullopt;
}

std::optional<ClassWitness> is_in_class(const Graph& g) {
  for (auto kind : {PatternId::Kind::FourK1, PatternId::Kind::C4,
                    PatternId::Kind::P6}) {
    PatternId p{kind, 0};
    if (auto w = induced_contains(g, p)) return ClassWitness{p, *w};
  }
  return std::nullopt;
}

std::optional<std::array<int, 6>> find_c6(const Graph& g) {
  auto w = induced_contains(g, PatternId{PatternId::Kind::C6, 0});
  if (!w) return std::nullopt;
  const auto& s = *w;  // sorted 6-subset inducing a cycle
  std::array<int, 6> cyc{};
  cyc[0] = s[0];
  // two cycle neighbours of s[0] within the witness; take the smaller first
  std::vector<int> nb;
  for (int v : s)
    if (v != s[0] && g.adjacent(s[0], v)) nb.push_back(v);
  cyc[1] = std::min(nb[0], nb[1]);
  VertexSet used(g.vertex_count());
  used.add(cyc[0]);
  used.add(cyc[1]);
  for (int i = 2; i < 6; ++i) {
    for (int v : s)
      if (!used.contains(v) && g.adjacent(cyc[i - 1], v)) {
        cyc[i] = v;
        used.add(v);
        break;
      }
  }
  return cyc;
}

}  // namespace cw
