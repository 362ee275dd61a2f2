#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include "pairstab/constructors.hpp"
#include "pairstab/corpus.hpp"
#include "pairstab/errors.hpp"
#include "pairstab/examples.hpp"
#include "pairstab/graph6.hpp"
#include "pairstab/json_io.hpp"
#include "pairstab/scan.hpp"
#include "pairstab/search.hpp"
#include "pairstab/stability.hpp"
#include "pairstab/twist.hpp"

namespace py = pybind11;
using namespace pairstab;

PYBIND11_MODULE(_pairstab, m) {
  m.doc() = "Stability of direct products of graphs";

  static py::exception<InvalidInput> invalid(m, "InvalidInput", PyExc_ValueError);
  static py::exception<BoundExceeded> bound(m, "BoundExceeded", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const InvalidInput& e) {
      py::set_error(invalid, e.what());
    } catch (const BoundExceeded& e) {
      py::set_error(bound, e.what());
    }
  });

  py::class_<Graph>(m, "Graph")
      .def(py::init([](int order, const std::vector<Edge>& edges) { return Graph(order, edges); }),
           py::arg("order"), py::arg("edges") = std::vector<Edge>{})
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def("edges", &Graph::edges)
      .def("neighbors", &Graph::neighbors)
      .def("adjacent", &Graph::adjacent)
      .def("graph6", [](const Graph& g) { return emit_graph6(g); })
      .def(py::self == py::self)
      .def("__repr__", [](const Graph& g) { return "Graph('" + emit_graph6(g) + "')"; });

  m.def("parse_graph6", [](const std::string& s) { return parse_graph6(s); });
  m.def("cycle", &cycle);
  m.def("complete", &complete);
  m.def("path", &path);
  m.def("direct_product", [](const Graph& a, const Graph& b) { return direct_product(a, b).graph; });
  m.def("double_cover", [](const Graph& g) { return double_cover(g).graph; });
  m.def("boolean_square", &boolean_square);
  m.def("gamma_star", &gamma_star);
  m.def("is_connected", &is_connected);
  m.def("is_bipartite", &is_bipartite);
  m.def("is_r_thin", &is_r_thin);
  m.def("canonical_id", &canonical_id);

  m.def("automorphism_order", [](const Graph& g) { return automorphism_group(g).order(); });
  m.def("automorphism_generators", [](const Graph& g) {
    std::vector<std::vector<Vertex>> out;
    for (const auto& p : automorphism_group(g).generators()) out.push_back(p.image());
    return out;
  });
  m.def("are_isomorphic", [](const Graph& a, const Graph& b) { return are_isomorphic(a, b).has_value(); });

  m.def("length_sets", [](const Graph& g) {
    std::vector<std::set<int>> out;
    for (const auto& ls : compatibility_profile(g).lengths) out.push_back(ls.lengths);
    return out;
  });
  m.def("is_compatible", [](const Graph& g, int n) { return is_compatible(g, n).compatible; });
  m.def("layer_subgroup_order", [](const Graph& g, const Graph& s) { return layer_subgroup(g, s).order(); });

  m.def("_pair_stability_json", [](const Graph& g, const Graph& s) { return to_json(pair_stability(g, s)).dump(); });
  m.def("_twist_json", [](const std::string& spec) {
    const TwistGraph t = twist_construct(twist_from_json(Json::parse(spec)));
    return emit_graph6(t.graph);
  });
  m.def("verify_worked_examples", [] {
    std::vector<std::tuple<std::string, bool, std::string>> out;
    for (const auto& c : verify_worked_examples()) out.emplace_back(c.name, c.passed, c.detail);
    return out;
  });
  m.def(
      "_scan_json",
      [](const std::vector<Graph>& graphs, int max_order, int n_min, int n_max, int jobs, bool theorems,
         bool conjectures) {
        ScanOptions o;
        if (graphs.empty()) {
          o.corpus = generate_graphs(1, max_order, true);
          o.corpus_descriptor = "generated:connected:1.." + std::to_string(max_order);
        } else {
          o.corpus = make_corpus(graphs);
          o.corpus_descriptor = "python";
        }
        o.n_min = n_min;
        o.n_max = n_max;
        o.jobs = jobs;
        o.theorems = theorems;
        o.conjectures = conjectures;
        py::gil_scoped_release release;
        return run_scan(o).dump();
      },
      py::arg("graphs"), py::arg("max_order"), py::arg("n_min"), py::arg("n_max"), py::arg("jobs"),
      py::arg("theorems"), py::arg("conjectures"));
}
