#include "cw/generators.hpp"

#include <algorithm>
#include <random>

#include "cw/decompose.hpp"
#include "cw/patterns.hpp"

namespace cw {

namespace {

constexpr int mod6(int x) { return ((x % 6) + 6) % 6; }

struct Builder {
  int n;
  std::vector<std::pair<int, int>> edges;

  void edge(int u, int v) { edges.emplace_back(u, v); }

  void clique(const std::vector<int>& vs) {
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j) edge(vs[i], vs[j]);
  }

  void join(const std::vector<int>& a, const std::vector<int>& b) {
    for (int u : a)
      for (int v : b) edge(u, v);
  }

  // vertex i of a (in list order) adjacent to the first t[i] vertices of b;
  // prefixes are nested, so both sides stay monotone regardless of t
  void staircase(const std::vector<int>& a, const std::vector<int>& b,
                 const std::vector<int>& t) {
    for (std::size_t i = 0; i < a.size(); ++i)
      for (int r = 0; r < t[i]; ++r) edge(a[i], b[r]);
  }
};

// non-increasing thresholds in [lo, hi], sampled from raw rng output
std::vector<int> sample_profile(std::size_t len, int lo, int hi,
                                std::mt19937_64& rng) {
  std::vector<int> t(len);
  for (auto& x : t) x = lo + static_cast<int>(rng() % (hi - lo + 1));
  std::sort(t.begin(), t.end(), std::greater<int>());
  return t;
}

}  // namespace

GeneratedInstance gen_instance(const InstanceParams& p) {
  for (int j = 0; j < 6; ++j)
    if (p.x3_sizes[j] < 0 || p.x4_sizes[j] < 0)
      throw GenerateError("negative class size");
  if (p.x2_size < 0 || p.x6_size < 0) throw GenerateError("negative class size");
  if (p.x2_pair < 0 || p.x2_pair > 2) throw GenerateError("x2 pair out of range");

  // Certain distance-two X3 pairs can never carry an edge: the surrounding
  // forced relations would close a C4 through the anchor. Pair i stands for
  // the classes {i, i+2}.
  int q = p.x2_pair;
  std::array<bool, 6> pair_blocked{};
  if (p.x2_size > 0)
    for (int d : {0, 2, 3, 5}) pair_blocked[mod6(q + d)] = true;
  for (int j = 0; j < 6; ++j) {
    if (p.x4_sizes[j] == 0) continue;
    pair_blocked[mod6(j + 2)] = true;
    pair_blocked[mod6(j + 3)] = true;
    if (p.x4_sizes[mod6(j + 3)] > 0) {
      pair_blocked[mod6(j + 1)] = true;
      pair_blocked[mod6(j + 4)] = true;
    }
  }
  // Edges on opposite pairs i and i+3 close a C4 through the consecutive
  // joins, so at most one of the two triples can be a triangle
  if (p.configs[0] == InstanceParams::TripleKind::Triangle &&
      p.configs[1] == InstanceParams::TripleKind::Triangle)
    throw GenerateError(
        "two triangle configurations put edges on opposite X3 pairs, which "
        "closes a C4 through the consecutive joins");
  // A triangle configuration needs edges on all three pairs of its triple,
  // and every X4 class (or X2) blocks at least one pair in each triple
  for (int parity = 0; parity < 2; ++parity)
    if (p.configs[parity] == InstanceParams::TripleKind::Triangle)
      for (int i : {parity, parity + 2, parity + 4})
        if (pair_blocked[i])
          throw GenerateError(
              "triangle configuration conflicts with X2/X4 classes: the pair "
              "X3_" + std::to_string(i + 1) + ", X3_" + std::to_string(mod6(i + 2) + 1) +
              " cannot carry edges without closing a C4");

  std::mt19937_64 rng(p.seed);
  std::string rejection;
  for (int attempt = 1; attempt <= p.max_retries; ++attempt) {
    // vertex layout: anchor, X6, X2, X4 blocks (low side first), X3 blocks
    int next = 6;
    auto block = [&](int size) {
      std::vector<int> vs(size);
      for (int& v : vs) v = next++;
      return vs;
    };
    std::vector<int> x6 = block(p.x6_size);
    std::vector<int> x2 = block(p.x2_size);
    std::array<std::vector<int>, 6> x4s0, x4s1, x3, x4;
    for (int j = 0; j < 6; ++j) {
      int s0 = std::clamp(p.x4_side0[j], 0, p.x4_sizes[j]);
      x4s0[j] = block(s0);
      x4s1[j] = block(p.x4_sizes[j] - s0);
      x4[j] = x4s0[j];
      x4[j].insert(x4[j].end(), x4s1[j].begin(), x4s1[j].end());
    }
    for (int j = 0; j < 6; ++j) x3[j] = block(p.x3_sizes[j]);
    int n = next;

    Builder b{n, {}};
    std::vector<int> anchor_all{0, 1, 2, 3, 4, 5};
    for (int i = 0; i < 6; ++i) b.edge(i, (i + 1) % 6);

    b.clique(x6);
    b.clique(x2);
    for (int j = 0; j < 6; ++j) {
      b.clique(x4[j]);
      b.clique(x3[j]);
    }

    // anchor adjacencies
    for (int j = 0; j < 6; ++j) {
      for (int v : x3[j])
        for (int d = 0; d < 3; ++d) b.edge(v, mod6(j + d));
      for (int v : x4[j])
        for (int d = 0; d < 4; ++d) b.edge(v, mod6(j + d));
    }
    for (int v : x2) {
      b.edge(v, p.x2_pair);
      b.edge(v, p.x2_pair + 3);
    }
    b.join(x6, anchor_all);

    // X6 joins everything else
    std::vector<int> outside;
    for (int v = 0; v < n; ++v)
      if (std::find(x6.begin(), x6.end(), v) == x6.end()) outside.push_back(v);
    b.join(x6, outside);

    // X2 joins its four partner classes
    b.join(x2, x3[mod6(q + 2)]);
    b.join(x2, x3[mod6(q + 5)]);
    b.join(x2, x4[q]);
    b.join(x2, x4[mod6(q + 3)]);

    // consecutive X3 classes join, opposite ones stay apart (no edges)
    for (int j = 0; j < 6; ++j) b.join(x3[j], x3[mod6(j + 1)]);

    // the two triples at distance two. Each X3 class keeps track of how much
    // of its leading block is reached from a distance-two partner; the X4
    // staircases later must cover at least that prefix, or an uncovered
    // vertex plus its partner edge would close a C4 through the anchor
    std::array<int, 6> exposed{};
    std::array<bool, 6> blocked = pair_blocked;
    for (int parity = 0; parity < 2; ++parity)
      if (p.configs[parity] == InstanceParams::TripleKind::Triangle)
        for (int i : {parity, parity + 2, parity + 4})
          blocked[mod6(i + 3)] = true;
    for (int parity = 0; parity < 2; ++parity) {
      std::array<int, 3> mem{parity, parity + 2, parity + 4};
      if (p.configs[parity] == InstanceParams::TripleKind::Triangle) {
        std::array<std::vector<int>, 3> inner;
        for (int i = 0; i < 3; ++i) {
          int sz = static_cast<int>(x3[mem[i]].size());
          int in = std::clamp(p.inner_sizes[parity][i], sz > 0 ? 1 : 0, sz);
          inner[i].assign(x3[mem[i]].begin(), x3[mem[i]].begin() + in);
        }
        for (int i = 0; i < 3; ++i)
          for (int r = i + 1; r < 3; ++r) {
            b.join(inner[i], inner[r]);
            if (!inner[r].empty())
              exposed[mem[i]] = std::max(exposed[mem[i]], (int)inner[i].size());
            if (!inner[i].empty())
              exposed[mem[r]] = std::max(exposed[mem[r]], (int)inner[r].size());
          }
      } else {
        // one member kept anticomplete to the other two; a staircase is
        // allowed on one remaining pair if the surrounding classes permit it
        std::vector<int> open;
        for (int i : mem)
          if (!blocked[i]) open.push_back(i);
        if (!open.empty()) {
          int a = open[rng() % open.size()], c = mod6(a + 2);
          blocked[mod6(a + 3)] = true;  // the opposite pair must stay empty
          auto t = sample_profile(x3[a].size(),
                                  0, static_cast<int>(x3[c].size()), rng);
          b.staircase(x3[a], x3[c], t);
          if (!t.empty()) {
            exposed[c] = std::max(exposed[c], t[0]);
            int hit = 0;
            for (int v : t) hit += v > 0;
            exposed[a] = std::max(exposed[a], hit);
          }
        }
      }
    }

    // X4 ring relations and joins into the near X3 classes
    for (int j = 0; j < 6; ++j) {
      b.join(x4[j], x4[mod6(j + 1)]);
      if (j < 3) b.join(x4[j], x4[j + 3]);
      b.join(x4[j], x3[j]);
      b.join(x4[j], x3[mod6(j + 1)]);
      // the split sides: one X3 neighbour forced, the other a staircase that
      // must cover the prefix exposed by the triple configurations. X2
      // vertices see all of X4_q, X4_q+3 and one X3 class of each pair, so a
      // partial staircase there would close a C4 through the anchor; those
      // two blocks get full joins instead
      b.join(x4s0[j], x3[mod6(j + 5)]);
      b.join(x4s1[j], x3[mod6(j + 2)]);
      bool rigid = p.x2_size > 0 && (j == q || j == mod6(q + 3));
      // an X4 class two steps around the ring is anticomplete to both this
      // class and its far X3 target, and a missing staircase edge would then
      // complete an induced P6 through three anchor vertices
      int hi2 = (int)x3[mod6(j + 2)].size();
      int hi5 = (int)x3[mod6(j + 5)].size();
      int lo2 = rigid || p.x4_sizes[mod6(j + 4)] > 0 ? hi2 : exposed[mod6(j + 2)];
      int lo5 = rigid || p.x4_sizes[mod6(j + 2)] > 0 ? hi5 : exposed[mod6(j + 5)];
      b.staircase(x4s0[j], x3[mod6(j + 2)],
                  sample_profile(x4s0[j].size(), lo2, hi2, rng));
      b.staircase(x4s1[j], x3[mod6(j + 5)],
                  sample_profile(x4s1[j].size(), lo5, hi5, rng));
    }

    Graph g = Graph::from_edges(n, b.edges);
    if (auto w = is_in_class(g)) {
      rejection = "forbidden " + w->pattern.name() + " at";
      for (int v : w->vertices) rejection += " " + std::to_string(v);
      continue;
    }
    if (!find_c6(g)) {
      rejection = "no six-cycle";
      continue;
    }
    DecompositionReport r;
    try {
      r = build_partition(g);
    } catch (const DecomposeError& e) {
      rejection = e.what();
      continue;
    }
    if (!r.monotone || !r.all_pass()) {
      rejection = "verdicts failed";
      continue;
    }

    GeneratedInstance out{std::move(g), {}, attempt};
    auto as_set = [&](const std::vector<int>& vs) {
      VertexSet s(n);
      for (int v : vs) s.add(v);
      return s;
    };
    for (int i = 0; i < 6; ++i)
      out.intended.add("c" + std::to_string(i + 1), VertexSet::of(n, {i}));
    out.intended.add("X6", as_set(x6));
    out.intended.add("X2", as_set(x2));
    for (int j = 0; j < 6; ++j) {
      out.intended.add("X4_" + std::to_string(j + 1) + "^0", as_set(x4s0[j]));
      out.intended.add("X4_" + std::to_string(j + 1) + "^1", as_set(x4s1[j]));
    }
    for (int j = 0; j < 6; ++j)
      out.intended.add("X3_" + std::to_string(j + 1), as_set(x3[j]));
    return out;
  }
  throw GenerateError("instance generation exhausted its retries: " + rejection);
}

std::vector<std::pair<std::string, InstanceParams>> instance_presets() {
  using TK = InstanceParams::TripleKind;
  std::vector<std::pair<std::string, InstanceParams>> out;
  auto add = [&](const char* name, InstanceParams p) {
    out.emplace_back(name, std::move(p));
  };

  add("c6", {});
  {
    InstanceParams p;
    p.x3_sizes = {2, 2, 0, 0, 0, 0};
    add("tiny", p);
  }
  {
    InstanceParams p;
    p.x6_size = 2;
    p.x2_size = 2;
    p.x3_sizes = {2, 2, 2, 1, 2, 1};
    p.x4_sizes = {2, 0, 0, 2, 0, 0};
    p.x4_side0 = {1, 0, 0, 1, 0, 0};
    add("x2-mixed", p);
  }
  {
    InstanceParams p;
    p.x6_size = 1;
    p.x3_sizes = {3, 2, 3, 2, 3, 2};
    p.configs = {TK::Triangle, TK::Sparse};
    p.inner_sizes = {{{2, 1, 2}, {1, 1, 1}}};
    add("triangle-config", p);
  }
  {
    InstanceParams p;
    p.x3_sizes = {2, 3, 2, 3, 2, 3};
    p.configs = {TK::Sparse, TK::Triangle};
    p.inner_sizes = {{{1, 1, 1}, {2, 1, 2}}};
    add("triangle-odd", p);
  }
  {
    InstanceParams p;
    p.x6_size = 3;
    p.x4_sizes = {3, 2, 2, 0, 0, 0};
    p.x4_side0 = {2, 1, 1, 0, 0, 0};
    p.x3_sizes = {2, 2, 1, 1, 2, 2};
    add("x4-run", p);
  }
  {
    InstanceParams p;
    p.x4_sizes = {2, 0, 2, 0, 2, 0};
    p.x4_side0 = {1, 0, 1, 0, 1, 0};
    p.x3_sizes = {1, 2, 1, 2, 1, 2};
    add("x4-alternating", p);
  }
  {
    InstanceParams p;
    p.x2_size = 3;
    p.x2_pair = 2;
    p.x6_size = 1;
    p.x3_sizes = {1, 1, 2, 2, 2, 2};
    p.x4_sizes = {0, 0, 2, 0, 0, 2};
    p.x4_side0 = {0, 0, 1, 0, 0, 2};
    add("x2-far", p);
  }
  {
    InstanceParams p;
    p.x6_size = 4;
    p.x3_sizes = {5, 4, 5, 4, 5, 4};
    p.configs = {TK::Triangle, TK::Sparse};
    p.inner_sizes = {{{3, 2, 2}, {1, 1, 1}}};
    add("big-triangle", p);
  }
  {
    InstanceParams p;
    p.x6_size = 3;
    p.x2_size = 4;
    p.x2_pair = 1;
    p.x3_sizes = {4, 4, 4, 4, 4, 4};
    p.x4_sizes = {0, 3, 0, 0, 3, 0};
    p.x4_side0 = {0, 2, 0, 0, 1, 0};
    add("big-x2", p);
  }
  {
    InstanceParams p;
    p.x6_size = 5;
    p.x3_sizes = {6, 6, 5, 5, 6, 6};
    p.x4_sizes = {4, 3, 3, 0, 0, 0};
    p.x4_side0 = {2, 2, 1, 0, 0, 0};
    add("big-x4run", p);
  }
  return out;
}

ThreeRing gen_3ring(int m, const std::array<std::vector<int>, 3>& profiles) {
  if (m < 1) throw GenerateError("clique size must be positive");
  for (const auto& prof : profiles) {
    if (static_cast<int>(prof.size()) != m)
      throw GenerateError("profile length must equal the clique size");
    for (std::size_t i = 0; i < prof.size(); ++i) {
      if (prof[i] < 0 || prof[i] > m) throw GenerateError("threshold out of range");
      if (i > 0 && prof[i] > prof[i - 1])
        throw GenerateError("profile must be non-increasing");
    }
  }

  int n = 3 * m;
  Builder b{n, {}};
  std::array<std::vector<int>, 3> part;
  for (int t = 0; t < 3; ++t) {
    part[t].resize(m);
    for (int i = 0; i < m; ++i) part[t][i] = t * m + i;
    b.clique(part[t]);
  }
  for (int t = 0; t < 3; ++t) b.staircase(part[t], part[(t + 1) % 3], profiles[t]);

  ThreeRing out{Graph::from_edges(n, b.edges), {}};
  for (int t = 0; t < 3; ++t) {
    VertexSet s(n);
    for (int v : part[t]) s.add(v);
    out.partition.add("Q" + std::to_string(t + 1), std::move(s));
  }
  return out;
}

ThreeRing gen_3ring_stuck() {
  // each part's maximal vertex misses the last vertex of the next part and
  // its minimal vertex still reaches the first one: neither is uniform
  std::vector<int> prof{2, 2, 1};
  return gen_3ring(3, {prof, prof, prof});
}

Graph gen_random(int n, double p, std::uint64_t seed) {
  if (n < 0 || p < 0.0 || p > 1.0) throw GenerateError("bad parameters");
  std::mt19937_64 rng(seed);
  // compare raw draws against a fixed threshold so the sequence of
  // consumed outputs is identical everywhere
  long double scaled = static_cast<long double>(p) * 18446744073709551615.0L;
  std::uint64_t threshold =
      p >= 1.0 ? UINT64_MAX : static_cast<std::uint64_t>(scaled);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      std::uint64_t draw = rng();
      if (p >= 1.0 || draw < threshold) edges.emplace_back(i, j);
    }
  return Graph::from_edges(n, edges);
}

}  // namespace cw
