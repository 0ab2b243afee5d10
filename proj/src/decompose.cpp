#include "cw/decompose.hpp"

#include <algorithm>

#include "json.hpp"

namespace cw {

namespace {

constexpr int mod6(int x) { return ((x % 6) + 6) % 6; }

bool induces_pattern(const Graph& g, const std::vector<int>& verts,
                     const PatternId& p) {
  Graph sub = g.induced(verts);
  auto w = induced_contains(sub, p);
  return w && static_cast<int>(verts.size()) == p.order();
}

// The classification proofs name concrete witnesses; confirm them against
// the graph, falling back to a whole-graph search if the construction does
// not hold up (possible only when the input violates a precondition in more
// than one place).
[[noreturn]] void raise(const Graph& g, const std::string& what,
                        PatternId::Kind kind, std::vector<int> witness,
                        int vertex) {
  PatternId p{kind, 0};
  std::sort(witness.begin(), witness.end());
  if (!induces_pattern(g, witness, p)) {
    if (auto w = induced_contains(g, p)) witness = *w;
  }
  throw DecomposeError(what, p.name(), witness, vertex);
}

// first pair violating completeness (cross non-edge) or anticompleteness
// (cross edge)
std::optional<std::pair<int, int>> complete_violation(const Graph& g,
                                                      const VertexSet& X,
                                                      const VertexSet& Y) {
  for (int x = X.first(); x >= 0; x = X.next(x)) {
    VertexSet missing = Y - g.neighbours(x);
    if (!missing.empty()) return std::make_pair(x, missing.first());
  }
  return std::nullopt;
}

std::optional<std::pair<int, int>> anticomplete_violation(const Graph& g,
                                                          const VertexSet& X,
                                                          const VertexSet& Y) {
  for (int x = X.first(); x >= 0; x = X.next(x)) {
    VertexSet hit = g.neighbours_in(x, Y);
    if (!hit.empty()) return std::make_pair(x, hit.first());
  }
  return std::nullopt;
}

std::optional<std::pair<int, int>> clique_violation(const Graph& g,
                                                    const VertexSet& S) {
  for (int u = S.first(); u >= 0; u = S.next(u))
    for (int v = S.next(u); v >= 0; v = S.next(v))
      if (!g.adjacent(u, v)) return std::make_pair(u, v);
  return std::nullopt;
}

}  // namespace

C6Classes classify_by_c6(const Graph& g, const std::array<int, 6>& anchor) {
  int n = g.vertex_count();
  C6Classes cls;
  cls.anchor = anchor;
  cls.x2 = VertexSet(n);
  cls.x6 = VertexSet(n);
  for (auto& s : cls.x3) s = VertexSet(n);
  for (auto& s : cls.x4) s = VertexSet(n);

  VertexSet on_anchor(n);
  for (int c : anchor) on_anchor.add(c);
  // anchor must induce a 6-cycle
  for (int i = 0; i < 6; ++i)
    for (int k = i + 1; k < 6; ++k) {
      bool want = k - i == 1 || k - i == 5;
      if (g.adjacent(anchor[i], anchor[k]) != want)
        throw DecomposeError("anchor does not induce a 6-cycle", "",
                             {anchor.begin(), anchor.end()});
    }

  std::array<int, 3> x2_seen_j{-1, -1, -1};  // representative per pair class
  for (int x = 0; x < n; ++x) {
    if (on_anchor.contains(x)) continue;
    std::array<bool, 6> adj{};
    int d = 0;
    for (int i = 0; i < 6; ++i) {
      adj[i] = g.adjacent(x, anchor[i]);
      d += adj[i];
    }
    if (d == 0)
      raise(g, "vertex with no anchor neighbour", PatternId::Kind::FourK1,
            {x, anchor[0], anchor[2], anchor[4]}, x);
    if (d == 1) {
      int p = 0;
      while (!adj[p]) ++p;
      raise(g, "vertex with one anchor neighbour", PatternId::Kind::FourK1,
            {x, anchor[mod6(p + 1)], anchor[mod6(p + 3)], anchor[mod6(p + 5)]},
            x);
    }
    // two anchor neighbours at distance two with the middle missed is a C4
    for (int p = 0; p < 6; ++p)
      if (adj[p] && adj[mod6(p + 2)] && !adj[mod6(p + 1)])
        raise(g, "anchor neighbours at distance two", PatternId::Kind::C4,
              {x, anchor[p], anchor[mod6(p + 1)], anchor[mod6(p + 2)]}, x);
    if (d == 2) {
      int p = 0;
      while (!adj[p]) ++p;
      if (adj[mod6(p + 3)]) {
        int j = p < 3 ? p : p - 3;
        if (x2_seen_j[j] < 0) x2_seen_j[j] = x;
        cls.x2.add(x);
        if (cls.x2_index < 0) cls.x2_index = j;
      } else {
        // consecutive pair: the anchor path avoiding c_p extends through x
        int q = adj[mod6(p + 1)] ? p : mod6(p + 5);  // x ~ c_q, c_q+1
        raise(g, "vertex with two consecutive anchor neighbours",
              PatternId::Kind::P6,
              {x, anchor[mod6(q + 1)], anchor[mod6(q + 2)], anchor[mod6(q + 3)],
               anchor[mod6(q + 4)], anchor[mod6(q + 5)]},
              x);
      }
    } else if (d == 3 || d == 4) {
      // no distance-two gap, so the neighbours form a consecutive run
      int start = -1;
      for (int p = 0; p < 6; ++p)
        if (adj[p] && !adj[mod6(p + 5)]) start = p;
      if (start < 0)
        throw DecomposeError("unclassifiable anchor adjacency", "", {x}, x);
      if (d == 3)
        cls.x3[start].add(x);
      else
        cls.x4[start].add(x);
    } else if (d == 6) {
      cls.x6.add(x);
    } else {
      // d == 5 always contains a distance-two gap; unreachable
      throw DecomposeError("unclassifiable anchor adjacency", "", {x}, x);
    }
  }

  // all opposite-pair vertices must share one pair class
  std::vector<int> present;
  for (int j = 0; j < 3; ++j)
    if (x2_seen_j[j] >= 0) present.push_back(j);
  if (present.size() > 1) {
    int u = x2_seen_j[present[0]], v = x2_seen_j[present[1]];
    int ju = present[0], jv = present[1];
    if (g.adjacent(u, v)) {
      // pick adjacent anchor vertices, one from each opposite pair
      for (int a : {ju, ju + 3})
        for (int b : {jv, jv + 3})
          if (mod6(a - b) == 1 || mod6(b - a) == 1)
            raise(g, "opposite-pair vertices in different classes",
                  PatternId::Kind::C4, {u, anchor[mod6(a)], anchor[mod6(b)], v},
                  u);
    }
    // the remaining opposite pair completes a 4K1
    for (int t = 0; t < 3; ++t)
      if (t != ju && t != jv)
        raise(g, "opposite-pair vertices in different classes",
              PatternId::Kind::FourK1, {u, v, anchor[t], anchor[t + 3]}, u);
  }
  return cls;
}

std::pair<VertexSet, VertexSet> split_x4(const Graph& g, int j,
                                         const C6Classes& cls) {
  int n = g.vertex_count();
  const VertexSet& x4j = cls.x4[j];
  const VertexSet& low = cls.x3[mod6(j + 5)];
  const VertexSet& high = cls.x3[mod6(j + 2)];
  VertexSet side0(n), side1(n);
  for (int x = x4j.first(); x >= 0; x = x4j.next(x)) {
    if (low.is_subset_of(g.neighbours(x))) {
      side0.add(x);
    } else if (high.is_subset_of(g.neighbours(x))) {
      side1.add(x);
    } else {
      int y = (low - g.neighbours(x)).first();
      int z = (high - g.neighbours(x)).first();
      raise(g, "x4 vertex complete to neither neighbouring x3 class",
            PatternId::Kind::P6,
            {y, cls.anchor[j], x, cls.anchor[mod6(j + 2)], z,
             cls.anchor[mod6(j + 4)]},
            x);
    }
  }
  return {side0, side1};
}

TripleConfig triangle_configuration(const Graph& g, const C6Classes& cls,
                                    int parity) {
  int n = g.vertex_count();
  TripleConfig cfg;
  cfg.members = {mod6(parity), mod6(parity + 2), mod6(parity + 4)};
  for (auto& s : cfg.inner) s = VertexSet(n);
  for (auto& s : cfg.outer) s = VertexSet(n);

  auto set_of = [&](int i) -> const VertexSet& { return cls.x3[cfg.members[i]]; };

  for (int i = 0; i < 3; ++i) {
    bool anti = !anticomplete_violation(g, set_of(i), set_of((i + 1) % 3)) &&
                !anticomplete_violation(g, set_of(i), set_of((i + 2) % 3));
    if (anti) {
      cfg.kind = TripleConfig::Sparse;
      return cfg;
    }
  }

  // not sparse: a triangle across the three sets must exist
  cfg.kind = TripleConfig::Triangle;
  bool found = false;
  for (int a = set_of(0).first(); a >= 0 && !found; a = set_of(0).next(a))
    for (int b = set_of(1).first(); b >= 0 && !found; b = set_of(1).next(b)) {
      if (!g.adjacent(a, b)) continue;
      for (int c = set_of(2).first(); c >= 0 && !found; c = set_of(2).next(c))
        if (g.adjacent(a, c) && g.adjacent(b, c)) {
          cfg.triangle = {a, b, c};
          found = true;
        }
    }
  if (!found)
    throw DecomposeError(
        "triple is neither sparse nor contains a cross triangle", "",
        {cfg.members[0], cfg.members[1], cfg.members[2]});

  // inner side of member i = neighbours of the next member's triangle vertex
  for (int i = 0; i < 3; ++i) {
    cfg.inner[i] = g.neighbours_in(cfg.triangle[(i + 1) % 3], set_of(i));
    cfg.outer[i] = set_of(i) - cfg.inner[i];
    if (cfg.inner[i].empty())
      throw DecomposeError("triangle configuration with an empty inner side",
                           "", {cfg.triangle[i]});
  }
  for (int i = 0; i < 3; ++i)
    for (int r = 0; r < 3; ++r) {
      if (i == r) continue;
      if (auto v = complete_violation(g, cfg.inner[i], cfg.inner[r]))
        throw DecomposeError("inner sides of a triangle configuration not "
                             "complete to each other",
                             "", {v->first, v->second});
      if (auto v = anticomplete_violation(g, cfg.outer[i], set_of(r)))
        throw DecomposeError("outer side of a triangle configuration not "
                             "anticomplete to the other members",
                             "", {v->first, v->second});
    }
  return cfg;
}

bool DecompositionReport::all_pass() const {
  return std::all_of(verdicts.begin(), verdicts.end(),
                     [](const ObservationVerdict& v) { return v.pass; });
}

DecompositionReport build_partition(const Graph& g) {
  if (auto w = is_in_class(g))
    throw DecomposeError("graph is not (4K1, C4, P6)-free", w->pattern.name(),
                         w->vertices);
  auto anchor = find_c6(g);
  if (!anchor) throw DecomposeError("graph contains no C6", "", {});

  DecompositionReport r;
  r.anchor = *anchor;
  r.classes = classify_by_c6(g, *anchor);
  for (int j = 0; j < 6; ++j) r.x4_split[j] = split_x4(g, j, r.classes);
  r.configs[0] = triangle_configuration(g, r.classes, 0);
  r.configs[1] = triangle_configuration(g, r.classes, 1);

  int n = g.vertex_count();
  for (int i = 0; i < 6; ++i)
    r.partition.add("c" + std::to_string(i + 1),
                    VertexSet::of(n, {r.anchor[i]}));
  r.partition.add("X6", r.classes.x6);
  r.partition.add("X2", r.classes.x2);
  for (int j = 0; j < 6; ++j) {
    r.partition.add("X4_" + std::to_string(j + 1) + "^0", r.x4_split[j].first);
    r.partition.add("X4_" + std::to_string(j + 1) + "^1", r.x4_split[j].second);
  }
  for (int j = 0; j < 6; ++j)
    r.partition.add("X3_" + std::to_string(j + 1), r.classes.x3[j]);

  r.monotone = is_monotone_partition(g, r.partition).ok;
  r.verdicts = verify_observations(g, r);
  return r;
}

std::vector<ObservationVerdict> verify_observations(
    const Graph& g, const DecompositionReport& r) {
  std::vector<ObservationVerdict> out;
  const C6Classes& c = r.classes;
  int n = g.vertex_count();

  auto push = [&](std::string name, int j,
                  std::optional<std::pair<int, int>> witness) {
    out.push_back({std::move(name), j, !witness.has_value(), witness});
  };
  auto monotone_pair_witness =
      [&](const VertexSet& X, const VertexSet& Y)
      -> std::optional<std::pair<int, int>> {
    if (auto w = crossing_witness(g, X, Y))
      return std::make_pair(w->x, w->x_prime);
    return std::nullopt;
  };

  // X6: clique, complete to everything else
  push("X6_clique", -1, clique_violation(g, c.x6));
  VertexSet rest = g.vertices() - c.x6;
  push("X6_complete_to_rest", -1, complete_violation(g, c.x6, rest));

  // X2: single opposite pair, clique, uniform to every other named set with
  // one common neighbourhood
  push("X2_clique", -1, clique_violation(g, c.x2));
  {
    std::optional<std::pair<int, int>> w;
    if (c.x2_index >= 0) {
      int j = c.x2_index;
      VertexSet expected = c.x3[mod6(j + 2)] | c.x3[mod6(j + 5)] |
                           c.x4[j] | c.x4[mod6(j + 3)] | c.x6;
      expected.add(c.anchor[j]);
      expected.add(c.anchor[mod6(j + 3)]);
      for (int u = c.x2.first(); u >= 0 && !w; u = c.x2.next(u)) {
        VertexSet nb = g.neighbours(u) - c.x2;
        if (nb != expected) {
          VertexSet diff = (nb - expected) | (expected - nb);
          w = std::make_pair(u, diff.first());
        }
      }
    }
    push("X2_one_neighbourhood", -1, w);
  }

  for (int j = 0; j < 6; ++j) {
    int J = j + 1;
    push("X4_clique", J, clique_violation(g, c.x4[j]));
    push("X3_clique", J, clique_violation(g, c.x3[j]));

    VertexSet joined = c.x4[mod6(j + 1)] | c.x4[mod6(j + 3)] | c.x4[mod6(j + 5)];
    push("X4_join_X4", J, complete_violation(g, c.x4[j], joined));
    VertexSet apart = c.x4[mod6(j + 2)] | c.x4[mod6(j + 4)];
    push("X4_anti_X4", J, anticomplete_violation(g, c.x4[j], apart));

    push("X4_join_X3", J,
         complete_violation(g, c.x4[j], c.x3[j] | c.x3[mod6(j + 1)]));
    push("X4_anti_X3", J,
         anticomplete_violation(g, c.x4[j],
                                c.x3[mod6(j + 3)] | c.x3[mod6(j + 4)]));

    push("X4_split_low", J,
         complete_violation(g, r.x4_split[j].first, c.x3[mod6(j + 5)]));
    push("X4_split_high", J,
         complete_violation(g, r.x4_split[j].second, c.x3[mod6(j + 2)]));

    for (int eta = 0; eta < 2; ++eta) {
      const VertexSet& side =
          eta == 0 ? r.x4_split[j].first : r.x4_split[j].second;
      int non_uniform = 0;
      std::optional<std::pair<int, int>> w;
      for (int i = 0; i < r.partition.part_count(); ++i) {
        const VertexSet& other = r.partition.parts[i];
        if (other.intersects(side) || other.empty() || side.empty()) continue;
        if (!relation_between(g, side, other).uniform() && ++non_uniform > 1 && !w)
          w = std::make_pair(side.first(), other.first());
      }
      push("X4_uniform_except_one_" + std::to_string(eta), J, w);
      push("X4_monotone_" + std::to_string(eta), J,
           monotone_pair_witness(side, g.vertices() - side));
    }

    push("X3_join_X3", J,
         complete_violation(g, c.x3[j], c.x3[mod6(j + 1)] | c.x3[mod6(j + 5)]));
    push("X3_anti_X3", J,
         anticomplete_violation(g, c.x3[j], c.x3[mod6(j + 3)]));
    push("X3_monotone_pair", J,
         monotone_pair_witness(c.x3[j], c.x3[mod6(j + 2)] | c.x3[mod6(j + 4)]));
    push("X3_monotone", J, monotone_pair_witness(c.x3[j], g.vertices() - c.x3[j]));
  }

  for (int parity = 0; parity < 2; ++parity) {
    const TripleConfig& cfg = r.configs[parity];
    std::optional<std::pair<int, int>> w;
    if (cfg.kind == TripleConfig::Sparse) {
      bool some_anti = false;
      for (int i = 0; i < 3 && !some_anti; ++i) {
        VertexSet others(n);
        others |= c.x3[cfg.members[(i + 1) % 3]];
        others |= c.x3[cfg.members[(i + 2) % 3]];
        if (!anticomplete_violation(g, c.x3[cfg.members[i]], others))
          some_anti = true;
      }
      if (!some_anti)
        w = std::make_pair(c.x3[cfg.members[0]].first(),
                           c.x3[cfg.members[1]].first());
    } else {
      for (int i = 0; i < 3 && !w; ++i)
        for (int t = 0; t < 3 && !w; ++t) {
          if (i == t) continue;
          if (auto v = complete_violation(g, cfg.inner[i], cfg.inner[t])) w = v;
          if (!w)
            if (auto v = anticomplete_violation(g, cfg.outer[i],
                                                c.x3[cfg.members[t]]))
              w = v;
        }
    }
    push("X3_triple_config", parity + 1, w);
  }
  return out;
}

std::string partition_to_json(const VertexPartition& P) {
  nlohmann::json j;
  j["parts"] = nlohmann::json::array();
  for (int i = 0; i < P.part_count(); ++i)
    j["parts"].push_back(
        {{"name", P.names[i]}, {"vertices", P.parts[i].to_vector()}});
  return j.dump();
}

VertexPartition partition_from_json(const std::string& text, int universe) {
  nlohmann::json j = nlohmann::json::parse(text);
  VertexPartition P;
  for (const auto& part : j.at("parts")) {
    VertexSet s(universe);
    for (int v : part.at("vertices").get<std::vector<int>>()) s.add(v);
    P.add(part.at("name").get<std::string>(), std::move(s));
  }
  return P;
}

std::string DecompositionReport::to_json() const {
  nlohmann::json j;
  j["anchor"] = std::vector<int>(anchor.begin(), anchor.end());
  j["monotone"] = monotone;
  nlohmann::json cl;
  cl["X6"] = classes.x6.to_vector();
  cl["X2"] = classes.x2.to_vector();
  cl["X2_pair"] = classes.x2_index;
  for (int i = 0; i < 6; ++i) {
    cl["X3_" + std::to_string(i + 1)] = classes.x3[i].to_vector();
    cl["X4_" + std::to_string(i + 1)] = classes.x4[i].to_vector();
    cl["X4_" + std::to_string(i + 1) + "^0"] = x4_split[i].first.to_vector();
    cl["X4_" + std::to_string(i + 1) + "^1"] = x4_split[i].second.to_vector();
  }
  j["classes"] = cl;
  j["configurations"] = nlohmann::json::array();
  for (const auto& cfg : configs) {
    nlohmann::json jc;
    jc["members"] = std::vector<int>{cfg.members[0] + 1, cfg.members[1] + 1,
                                     cfg.members[2] + 1};
    jc["kind"] = cfg.kind == TripleConfig::Sparse ? "sparse" : "triangle";
    if (cfg.kind == TripleConfig::Triangle) {
      jc["triangle"] = std::vector<int>(cfg.triangle.begin(), cfg.triangle.end());
      for (int i = 0; i < 3; ++i) {
        jc["inner"].push_back(cfg.inner[i].to_vector());
        jc["outer"].push_back(cfg.outer[i].to_vector());
      }
    }
    j["configurations"].push_back(jc);
  }
  j["partition"] = nlohmann::json::parse(partition_to_json(partition));
  j["verdicts"] = nlohmann::json::array();
  for (const auto& v : verdicts) {
    nlohmann::json jv{{"name", v.name}, {"j", v.j}, {"pass", v.pass}};
    if (v.witness)
      jv["witness"] = std::vector<int>{v.witness->first, v.witness->second};
    j["verdicts"].push_back(jv);
  }
  return j.dump();
}

}  // namespace cw
