#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "cw/decompose.hpp"
#include "cw/generators.hpp"
#include "cw/graph.hpp"
#include "cw/oracles.hpp"
#include "cw/patterns.hpp"
#include "cw/term.hpp"

using nlohmann::json;
using namespace cw;

namespace {

// 0 = success / true, 1 = negative verdict, 2 = usage or input error
constexpr int kOk = 0, kNo = 1, kErr = 2;

int log_level() {
  const char* e = std::getenv("CWF_LOG");
  return e && *e ? std::atoi(e) : 0;
}

void note(const std::string& msg) {
  if (log_level() >= 1) std::cerr << "cwtool: " << msg << "\n";
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spill(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

struct Options {
  std::vector<std::string> inputs;
  std::string out;
  bool as_json = false;
  bool verify = false;
  std::string method = "exact";
  int max_width = 0;
  std::uint64_t seed = 1;
  int jobs = 1;
};

struct Outcome {
  int status = kOk;
  std::string text;
};

// run one handler per input file, --jobs at a time; outputs keep file order
template <typename Fn>
int run_batch(const Options& o, Fn fn) {
  std::vector<std::future<Outcome>> slots(o.inputs.size());
  int overall = kOk;
  std::size_t launched = 0, printed = 0;
  while (printed < o.inputs.size()) {
    while (launched < o.inputs.size() &&
           launched - printed < static_cast<std::size_t>(std::max(1, o.jobs))) {
      const std::string& path = o.inputs[launched];
      note("processing " + path);
      slots[launched] = std::async(std::launch::async, [&fn, path]() -> Outcome {
        try {
          return fn(parse_graph(slurp(path)));
        } catch (const ParseError& e) {
          return {kErr, std::string("parse error: ") + e.what() + "\n"};
        } catch (const std::runtime_error& e) {
          return {kErr, std::string("error: ") + e.what() + "\n"};
        }
      });
      ++launched;
    }
    Outcome r = slots[printed].get();
    if (o.inputs.size() > 1) std::cout << o.inputs[printed] << ": ";
    std::cout << r.text;
    overall = std::max(overall, r.status);
    ++printed;
  }
  return overall;
}

std::string show(const std::vector<int>& vs) {
  std::string s = "{";
  for (std::size_t i = 0; i < vs.size(); ++i)
    s += (i ? " " : "") + std::to_string(vs[i]);
  return s + "}";
}

Outcome do_check(const Graph& g, const Options& o) {
  auto w = is_in_class(g);
  auto c6 = w ? std::nullopt : find_c6(g);
  if (o.as_json) {
    json j{{"in_class", !w}};
    if (w) {
      j["pattern"] = w->pattern.name();
      j["witness"] = w->vertices;
    } else {
      j["c6"] = c6 ? json(std::vector<int>(c6->begin(), c6->end())) : json();
    }
    return {w || !c6 ? kNo : kOk, j.dump() + "\n"};
  }
  if (w)
    return {kNo, "not in class: induced " + w->pattern.name() + " at " +
                     show(w->vertices) + "\n"};
  if (!c6) return {kNo, "in class but no C6\n"};
  return {kOk, "in class, C6 found at " +
                   show({c6->begin(), c6->end()}) + "\n"};
}

Outcome do_decompose(const Graph& g, const Options& o) {
  DecompositionReport r;
  try {
    r = build_partition(g);
  } catch (const DecomposeError& e) {
    if (o.as_json) {
      json j{{"ok", false}, {"error", e.what()}, {"pattern", e.pattern},
             {"witness", e.witness}};
      return {kNo, j.dump() + "\n"};
    }
    return {kNo, std::string("decomposition failed: ") + e.what() + "\n"};
  }
  bool ok = r.monotone && r.all_pass();
  std::string report = r.to_json();
  if (!o.out.empty()) spill(o.out, report);
  if (o.as_json) return {ok ? kOk : kNo, report + "\n"};

  std::ostringstream s;
  s << "anchor " << show({r.anchor.begin(), r.anchor.end()}) << "\n";
  int nonempty = 0;
  for (const auto& part : r.partition.parts) nonempty += !part.empty();
  s << "parts " << r.partition.part_count() << " (" << nonempty
    << " non-empty), monotone " << (r.monotone ? "yes" : "no") << "\n";
  for (int t = 0; t < 2; ++t)
    s << "triple " << t << ": "
      << (r.configs[t].kind == TripleConfig::Triangle ? "triangle" : "sparse")
      << "\n";
  for (const auto& v : r.verdicts)
    if (!v.pass) s << "FAIL " << v.name << " (j=" << v.j << ")\n";
  s << (ok ? "ok" : "failed") << "\n";
  return {ok ? kOk : kNo, s.str()};
}

Outcome do_term(const Graph& g, const Options& o) {
  DecompositionReport r;
  CwTerm t;
  try {
    r = build_partition(g);
    t = build_term(g, r.partition);
  } catch (const DecomposeError& e) {
    return {kNo, std::string("decomposition failed: ") + e.what() + "\n"};
  } catch (const TermError& e) {
    return {kNo, std::string("term construction failed: ") + e.what() + "\n"};
  }
  VerifyResult vr = verify_term(t, g);
  int limit = o.max_width > 0 ? o.max_width : 27;
  bool ok = vr.width_used <= limit && (!o.verify || vr.ok);
  if (!o.out.empty()) spill(o.out, t.to_json());
  if (o.as_json) {
    json j{{"width", vr.width_used}, {"budget", t.label_budget},
           {"operations", t.ops.size()}, {"verified", vr.ok}};
    return {ok ? kOk : kNo, j.dump() + "\n"};
  }
  std::ostringstream s;
  s << "width " << vr.width_used << " (budget " << t.label_budget << "), "
    << t.ops.size() << " operations";
  if (o.verify) s << ", verified " << (vr.ok ? "ok" : "MISMATCH");
  s << "\n";
  return {ok ? kOk : kNo, s.str()};
}

Outcome do_cwd_oracle(const Graph& g, const Options& o) {
  int max_c = o.max_width > 0 ? o.max_width : 4;
  int w;
  try {
    w = brute_cwd_exact(g, max_c);
  } catch (const OracleLimit& e) {
    return {kErr, std::string(e.what()) +
                      " (the exhaustive oracle handles n <= 8, width <= 4)\n"};
  }
  if (o.as_json) return {kOk, json{{"clique_width", w}}.dump() + "\n"};
  return {kOk, "clique-width " + std::to_string(w) + "\n"};
}

Outcome do_color(const Graph& g, const Options& o) {
  Colouring c;
  try {
    if (o.method == "exact") {
      c = chromatic_number_exact(g);
    } else if (o.method == "simplicial-exact") {
      c = chromatic_via_simplicial(g);
    } else if (o.method == "term-dp") {
      DecompositionReport r = build_partition(g);
      CwTerm t = build_term(g, r.partition);
      for (int q = 0; q <= g.vertex_count(); ++q) {
        TermColouring tc = color_via_term(t, q);
        if (tc.feasible) {
          c = {tc.assignment, q};
          break;
        }
      }
    } else {
      return {kErr, "unknown method " + o.method + "\n"};
    }
  } catch (const OracleLimit& e) {
    return {kErr, std::string(e.what()) +
                      " (try a smaller graph or another --method)\n"};
  } catch (const DecomposeError& e) {
    return {kNo, std::string("decomposition failed: ") + e.what() + "\n"};
  } catch (const TermError& e) {
    return {kNo, std::string("term construction failed: ") + e.what() + "\n"};
  }
  if (!is_proper(g, c.assignment))
    return {kNo, "internal error: colouring is not proper\n"};
  if (o.as_json) {
    json j{{"chi", c.colours}, {"assignment", c.assignment}};
    return {kOk, j.dump() + "\n"};
  }
  return {kOk, "chi " + std::to_string(c.colours) + ", colouring " +
                   show(c.assignment) + "\n"};
}

Outcome do_probe(const Graph& g, const Options& o) {
  DecompositionReport r;
  try {
    r = build_partition(g);
  } catch (const DecomposeError& e) {
    return {kNo, std::string("decomposition failed: ") + e.what() + "\n"};
  }
  bool ok = r.monotone && r.all_pass();
  if (o.as_json) return {ok ? kOk : kNo, r.to_json() + "\n"};
  std::ostringstream s;
  for (int t = 0; t < 2; ++t) {
    const TripleConfig& c = r.configs[t];
    s << "triple {" << c.members[0] + 1 << "," << c.members[1] + 1 << ","
      << c.members[2] + 1 << "}: "
      << (c.kind == TripleConfig::Triangle ? "triangle" : "sparse") << "\n";
  }
  for (const auto& v : r.verdicts) {
    s << (v.pass ? "pass " : "FAIL ") << v.name;
    if (v.j >= 0) s << " j=" << v.j;
    if (v.witness) s << " witness (" << v.witness->first << ","
                     << v.witness->second << ")";
    s << "\n";
  }
  s << "monotone " << (r.monotone ? "yes" : "no") << "\n";
  return {ok ? kOk : kNo, s.str()};
}

InstanceParams params_from_json(const json& j) {
  InstanceParams p;
  p.x2_size = j.value("x2_size", 0);
  p.x2_pair = j.value("x2_pair", 0);
  p.x6_size = j.value("x6_size", 0);
  if (j.contains("x3_sizes"))
    for (int i = 0; i < 6; ++i) p.x3_sizes[i] = j["x3_sizes"].at(i);
  if (j.contains("x4_sizes"))
    for (int i = 0; i < 6; ++i) p.x4_sizes[i] = j["x4_sizes"].at(i);
  if (j.contains("x4_side0"))
    for (int i = 0; i < 6; ++i) p.x4_side0[i] = j["x4_side0"].at(i);
  if (j.contains("configs"))
    for (int t = 0; t < 2; ++t)
      p.configs[t] = j["configs"].at(t) == "triangle"
                         ? InstanceParams::TripleKind::Triangle
                         : InstanceParams::TripleKind::Sparse;
  if (j.contains("inner_sizes"))
    for (int t = 0; t < 2; ++t)
      for (int i = 0; i < 3; ++i) p.inner_sizes[t][i] = j["inner_sizes"].at(t).at(i);
  p.max_retries = j.value("max_retries", p.max_retries);
  return p;
}

int do_gen(const Options& o, const std::string& kind, const std::string& preset,
           const std::string& params_path, int n, double prob) {
  Graph g(0);
  try {
    if (kind == "instance") {
      InstanceParams p;
      if (!params_path.empty()) {
        p = params_from_json(json::parse(slurp(params_path)));
      } else {
        bool found = false;
        for (auto& [name, pp] : instance_presets())
          if (name == preset) {
            p = pp;
            found = true;
          }
        if (!found) {
          std::cerr << "unknown preset " << preset << "; available:";
          for (auto& [name, pp] : instance_presets()) std::cerr << " " << name;
          std::cerr << "\n";
          return kErr;
        }
      }
      p.seed = o.seed;
      g = gen_instance(p).graph;
    } else if (kind == "3ring-stuck") {
      g = gen_3ring_stuck().graph;
    } else if (kind == "random") {
      g = gen_random(n, prob, o.seed);
    } else {
      std::cerr << "unknown kind " << kind
                << " (instance, 3ring-stuck, random)\n";
      return kErr;
    }
  } catch (const GenerateError& e) {
    std::cerr << "generation failed: " << e.what() << "\n";
    // parameter conflicts are usage errors; exhausted retries are a verdict
    return std::string(e.what()).find("exhausted") != std::string::npos ? kNo
                                                                        : kErr;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kErr;
  }
  std::string text = write_graph(g);
  if (o.out.empty())
    std::cout << text;
  else
    spill(o.out, text);
  if (o.as_json && !o.out.empty())
    std::cout << json{{"file", o.out}, {"n", g.vertex_count()},
                      {"m", g.edge_count()}}.dump()
              << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"structured clique-width toolkit"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* c, bool needs_input) {
    if (needs_input)
      c->add_option("--input", o.inputs, "graph file(s), DIMACS edge list")
          ->required();
    c->add_flag("--json", o.as_json, "machine-readable output");
    c->add_option("--jobs", o.jobs, "parallel workers for batch inputs");
    return c;
  };

  auto* check = add_common(app.add_subcommand("check", "class membership"), true);
  auto* decompose = add_common(
      app.add_subcommand("decompose", "anchored 26-part partition"), true);
  decompose->add_option("--out", o.out, "write the JSON report here");
  auto* term = add_common(
      app.add_subcommand("term", "build a clique-width expression"), true);
  term->add_option("--out", o.out, "write the term JSON here");
  term->add_flag("--verify", o.verify, "re-evaluate the term against the input");
  term->add_option("--max-width", o.max_width, "fail when width exceeds this");
  auto* cwd = add_common(
      app.add_subcommand("cwd-oracle", "exhaustive clique-width"), true);
  cwd->add_option("--max-width", o.max_width, "largest width to try (<= 4)");
  auto* color = add_common(app.add_subcommand("color", "optimal colouring"), true);
  color->add_option("--method", o.method,
                    "exact | simplicial-exact | term-dp");
  auto* probe = add_common(
      app.add_subcommand("probe", "observation verdict table"), true);

  auto* gen = app.add_subcommand("gen", "write a generated graph");
  std::string kind = "instance", preset = "c6", params_path;
  int n = 10;
  double prob = 0.5;
  gen->add_option("--kind", kind, "instance | 3ring-stuck | random");
  gen->add_option("--preset", preset, "named instance parameters");
  gen->add_option("--params", params_path, "JSON file with instance parameters");
  gen->add_option("--seed", o.seed, "random seed");
  gen->add_option("--n", n, "vertex count (random)");
  gen->add_option("--p", prob, "edge probability (random)");
  gen->add_option("--out", o.out, "output file (stdout when omitted)");
  gen->add_flag("--json", o.as_json, "print a JSON summary");

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed())
      return run_batch(o, [&](const Graph& g) { return do_check(g, o); });
    if (decompose->parsed())
      return run_batch(o, [&](const Graph& g) { return do_decompose(g, o); });
    if (term->parsed())
      return run_batch(o, [&](const Graph& g) { return do_term(g, o); });
    if (cwd->parsed())
      return run_batch(o, [&](const Graph& g) { return do_cwd_oracle(g, o); });
    if (color->parsed())
      return run_batch(o, [&](const Graph& g) { return do_color(g, o); });
    if (probe->parsed())
      return run_batch(o, [&](const Graph& g) { return do_probe(g, o); });
    if (gen->parsed()) return do_gen(o, kind, preset, params_path, n, prob);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kErr;
  }
  return kErr;
}
