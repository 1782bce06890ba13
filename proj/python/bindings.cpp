#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "szx/constructions.hpp"
#include "szx/enumeration.hpp"
#include "szx/graph.hpp"
#include "szx/indices.hpp"
#include "szx/verify.hpp"

namespace py = pybind11;
using namespace szx;

namespace {

std::vector<std::vector<int>> distance_rows(const Graph& g) {
  auto dist = all_pairs_distances(g);
  std::vector<std::vector<int>> rows(g.vertex_count());
  for (int u = 0; u < g.vertex_count(); ++u) {
    rows[u].resize(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) rows[u][v] = dist.at(u, v);
  }
  return rows;
}

}  // namespace

PYBIND11_MODULE(_szx, m) {
  m.doc() =
      "Exact Wiener / Szeged / revised Szeged indices, bicyclic graph "
      "enumeration and extremal verification";
  m.attr("UNREACHABLE") = kUnreachable;

  py::register_exception<DecodeError>(m, "DecodeError", PyExc_ValueError);
  py::register_exception<BudgetError>(m, "BudgetError", PyExc_RuntimeError);

  py::class_<Graph>(m, "Graph")
      .def(py::init<int>(), py::arg("n"))
      .def_property_readonly("n", &Graph::vertex_count)
      .def_property_readonly("m", &Graph::edge_count)
      .def("add_edge", &Graph::add_edge)
      .def("has_edge", &Graph::has_edge)
      .def("degree", &Graph::degree)
      .def("edges", &Graph::edges)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "<szx.Graph n=" + std::to_string(g.vertex_count()) +
               " m=" + std::to_string(g.edge_count()) + ">";
      });

  py::class_<BicyclicClass>(m, "BicyclicClass")
      .def_property_readonly("kind",
                             [](const BicyclicClass& c) {
                               return std::string(to_string(c.kind));
                             })
      .def_readonly("witness", &BicyclicClass::witness)
      .def_readonly("hub_x", &BicyclicClass::hub_x)
      .def_readonly("hub_y", &BicyclicClass::hub_y)
      .def_readonly("path_lengths", &BicyclicClass::path_lengths)
      .def("__repr__", [](const BicyclicClass& c) {
        return "<szx.BicyclicClass " + std::string(to_string(c.kind)) + ">";
      });

  m.def("from_graph6", [](const std::string& s) { return from_graph6(s); },
        py::arg("text"));
  m.def("to_graph6", &to_graph6, py::arg("g"));
  m.def("canonical_form", &canonical_form, py::arg("g"));
  m.def("bfs_distances", &bfs_distances, py::arg("g"), py::arg("source"));
  m.def("all_pairs_distances", &distance_rows, py::arg("g"));
  m.def("is_connected", &is_connected, py::arg("g"));
  m.def("cut_vertices", &cut_vertices, py::arg("g"));
  m.def("min_degree", &min_degree, py::arg("g"));
  m.def("classify_bicyclic", &classify_bicyclic, py::arg("g"));
  m.def("shortest_cycle_through_edge", &shortest_cycle_through_edge,
        py::arg("g"), py::arg("u"), py::arg("v"));

  m.def(
      "edge_partition",
      [](const Graph& g, int u, int v) {
        auto p = edge_partition(g, u, v, all_pairs_distances(g));
        return py::make_tuple(p.n_u, p.n_v, p.n_0);
      },
      py::arg("g"), py::arg("u"), py::arg("v"),
      "Returns (n_u, n_v, n_0) for edge uv.");
  m.def("wiener", &wiener, py::arg("g"));
  m.def("szeged", &szeged, py::arg("g"));
  m.def("revised_szeged_x4",
        [](const Graph& g) { return revised_szeged_x4(g).q; }, py::arg("g"),
        "4 * Sz*(g) as an exact integer.");
  m.def("deviation_sum", &deviation_sum, py::arg("g"));
  m.def("conjecture_bound_x4",
        [](int n) { return conjecture_bound_x4(n).q; }, py::arg("n"));
  m.def("eq1_residual", &eq1_residual, py::arg("g"));

  m.def("build_bn", &build_bn, py::arg("n"));
  m.def("build_theta",
        [](int a, int b, int c) { return build_theta(a, b, c); }, py::arg("a"),
        py::arg("b"), py::arg("c"));
  m.def("build_dumbbell", &build_dumbbell, py::arg("p"), py::arg("q"),
        py::arg("t"));
  m.def("attach_pendant", &attach_pendant, py::arg("g"), py::arg("at"));

  m.def(
      "enumerate_bicyclic",
      [](int n, const std::string& method, int jobs) {
        auto classes = enumerate_bicyclic(n, parse_enum_method(method), jobs);
        return std::vector<std::string>(classes.forms.begin(),
                                        classes.forms.end());
      },
      py::arg("n"), py::arg("method") = "naive", py::arg("jobs") = 1,
      "Sorted canonical graph6 forms of all bicyclic graphs of order n.");

  py::class_<ClassRow>(m, "ClassRow")
      .def_readonly("graph6", &ClassRow::canon)
      .def_property_readonly("kind",
                             [](const ClassRow& r) {
                               return std::string(to_string(r.cls.kind));
                             })
      .def_readonly("deviation_sum", &ClassRow::deviation_sum)
      .def_readonly("q4", &ClassRow::q4);

  py::class_<ConjectureReport>(m, "ConjectureReport")
      .def_readonly("n", &ConjectureReport::n)
      .def_readonly("class_count", &ConjectureReport::class_count)
      .def_readonly("max_q4", &ConjectureReport::max_q4)
      .def_readonly("bound_q4", &ConjectureReport::bound_q4)
      .def_readonly("maximizers", &ConjectureReport::maximizers)
      .def_readonly("maximizer_unique", &ConjectureReport::maximizer_unique)
      .def_readonly("maximizer_is_bn", &ConjectureReport::maximizer_is_bn)
      .def_readonly("second_q4", &ConjectureReport::second_q4)
      .def_readonly("second_place", &ConjectureReport::second_place)
      .def_readonly("second_is_theta_12", &ConjectureReport::second_is_theta_12)
      .def_readonly("counterexample", &ConjectureReport::counterexample)
      .def_readonly("table", &ConjectureReport::table)
      .def("passes", &ConjectureReport::passes);

  py::enum_<ThetaEdgeCase>(m, "ThetaEdgeCase")
      .value("DIFFERENT_SETS", ThetaEdgeCase::DifferentSets)
      .value("SAME_SET", ThetaEdgeCase::SameSet)
      .value("HUB_EQUIDISTANT", ThetaEdgeCase::HubEquidistant);

  py::class_<ThetaEdgeAnalysis>(m, "ThetaEdgeAnalysis")
      .def_readonly("u", &ThetaEdgeAnalysis::u)
      .def_readonly("v", &ThetaEdgeAnalysis::v)
      .def_readonly("kind", &ThetaEdgeAnalysis::kind)
      .def_readonly("hub_dist_x", &ThetaEdgeAnalysis::hub_dist_x)
      .def_readonly("hub_dist_y", &ThetaEdgeAnalysis::hub_dist_y)
      .def_readonly("cycle_len", &ThetaEdgeAnalysis::cycle_len)
      .def_readonly("predicted", &ThetaEdgeAnalysis::predicted)
      .def_readonly("predicted_is_lower_bound",
                    &ThetaEdgeAnalysis::predicted_is_lower_bound)
      .def_readonly("actual", &ThetaEdgeAnalysis::actual)
      .def_readonly("middle_of_odd_path",
                    &ThetaEdgeAnalysis::middle_of_odd_path);

  py::class_<ThetaSweepRow>(m, "ThetaSweepRow")
      .def_readonly("analysis", &ThetaSweepRow::analysis)
      .def_readonly("formula_ok", &ThetaSweepRow::formula_ok);

  py::class_<ThetaSweepReport>(m, "ThetaSweepReport")
      .def_readonly("n", &ThetaSweepReport::n)
      .def_readonly("rows", &ThetaSweepReport::rows)
      .def_readonly("zero_deviation_edges",
                    &ThetaSweepReport::zero_deviation_edges)
      .def_readonly("zero_iff_middle", &ThetaSweepReport::zero_iff_middle)
      .def_readonly("case_formulas_ok", &ThetaSweepReport::case_formulas_ok)
      .def("passes", &ThetaSweepReport::passes);

  py::class_<InequalityReport>(m, "InequalityReport")
      .def_readonly("n", &InequalityReport::n)
      .def_readonly("class_count", &InequalityReport::class_count)
      .def_readonly("bn_deviation", &InequalityReport::bn_deviation)
      .def_readonly("bn_expected", &InequalityReport::bn_expected)
      .def_readonly("violators", &InequalityReport::violators)
      .def("passes", &InequalityReport::passes);

  m.def(
      "verify_conjecture",
      [](int n, const std::string& method, int jobs) {
        return verify_conjecture(n, parse_enum_method(method), jobs);
      },
      py::arg("n"), py::arg("method") = "naive", py::arg("jobs") = 1);
  m.def("verify_lemma3", &verify_lemma3, py::arg("a"), py::arg("b"),
        py::arg("c"));
  m.def(
      "verify_case_inequalities",
      [](int n, const std::string& method, int jobs) {
        return verify_case_inequalities(n, parse_enum_method(method), jobs);
      },
      py::arg("n"), py::arg("method") = "naive", py::arg("jobs") = 1);

  m.def("analyze_theta_edges", [](int a, int b, int c) {
    return analyze_theta_edges(ThetaShape{a, b, c});
  });
  m.def("theta_path_vertex", [](int a, int b, int c, int path, int position) {
    return theta_path_vertex(ThetaShape{a, b, c}, path, position);
  });

  m.attr("__version__") = "0.1.0";
}
