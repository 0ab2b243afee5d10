#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cw/decompose.hpp"
#include "cw/generators.hpp"
#include "cw/graph.hpp"
#include "cw/oracles.hpp"
#include "cw/patterns.hpp"
#include "cw/term.hpp"

namespace py = pybind11;
using namespace cw;

namespace {

py::object loads(const std::string& text) {
  return py::module_::import("json").attr("loads")(text);
}

}  // namespace

PYBIND11_MODULE(cwgraph, m) {
  m.doc() = "structured clique-width toolkit";

  py::register_exception<DecomposeError>(m, "DecomposeError");
  py::register_exception<GenerateError>(m, "GenerateError");
  py::register_exception<TermError>(m, "TermError");
  py::register_exception<OracleLimit>(m, "OracleLimit");

  py::class_<Graph>(m, "Graph")
      .def(py::init<int>(), py::arg("n"))
      .def_static("from_edges", &Graph::from_edges, py::arg("n"),
                  py::arg("edges"))
      .def_property_readonly("n", &Graph::vertex_count)
      .def_property_readonly("m", &Graph::edge_count)
      .def("adjacent", &Graph::adjacent)
      .def("edges", &Graph::edges)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.vertex_count()) +
               ", m=" + std::to_string(g.edge_count()) + ")";
      });

  m.def("parse_graph", [](const std::string& t) { return parse_graph(t); });
  m.def("write_graph", &write_graph);

  m.def("is_in_class", [](const Graph& g) -> py::object {
    auto w = is_in_class(g);
    if (!w) return py::none();
    return py::make_tuple(w->pattern.name(), w->vertices);
  });
  m.def("find_c6", [](const Graph& g) -> py::object {
    auto c = find_c6(g);
    if (!c) return py::none();
    return py::cast(std::vector<int>(c->begin(), c->end()));
  });

  m.def("decompose", [](const Graph& g) { return loads(build_partition(g).to_json()); },
        "anchored 26-part partition report as a dict");

  m.def("build_term", [](const Graph& g) {
    DecompositionReport r = build_partition(g);
    return build_term(g, r.partition).to_json();
  });
  m.def("verify_term", [](const std::string& term_json, const Graph& g) {
    VerifyResult vr = verify_term(CwTerm::from_json(term_json), g);
    return py::make_tuple(vr.ok, vr.width_used);
  });

  m.def("brute_cwd_exact", [](const Graph& g, int max_c) {
    return brute_cwd_exact(g, max_c);
  }, py::arg("g"), py::arg("max_c") = 4);

  m.def("chromatic_number", [](const Graph& g, const std::string& method) {
    Colouring c;
    if (method == "exact") {
      c = chromatic_number_exact(g);
    } else if (method == "simplicial-exact") {
      c = chromatic_via_simplicial(g);
    } else if (method == "term-dp") {
      CwTerm t = build_term(g, build_partition(g).partition);
      for (int q = 0; q <= g.vertex_count(); ++q) {
        TermColouring tc = color_via_term(t, q);
        if (tc.feasible) {
          c = {tc.assignment, q};
          break;
        }
      }
    } else {
      throw std::invalid_argument("unknown method " + method);
    }
    return py::make_tuple(c.colours, c.assignment);
  }, py::arg("g"), py::arg("method") = "exact");

  m.def("instance_presets", [] {
    std::vector<std::string> names;
    for (auto& [name, p] : instance_presets()) names.push_back(name);
    return names;
  });
  m.def("gen_instance", [](const std::string& preset, std::uint64_t seed) {
    for (auto& [name, p] : instance_presets())
      if (name == preset) {
        InstanceParams q = p;
        q.seed = seed;
        return gen_instance(q).graph;
      }
    throw std::invalid_argument("unknown preset " + preset);
  }, py::arg("preset"), py::arg("seed") = 1);
  m.def("gen_random", &gen_random, py::arg("n"), py::arg("p"), py::arg("seed"));
}
