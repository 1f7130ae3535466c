#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cei/error.hpp"
#include "cei/graph_ideals.hpp"
#include "cei/io.hpp"
#include "cei/resolutions.hpp"
#include "cei/structure.hpp"
#include "cei/sweeps.hpp"

namespace py = pybind11;
using namespace cei;

namespace {

MonomialIdeal ideal_from_lists(int n, const std::vector<std::vector<int>>& gens) {
  std::vector<Monomial> raw;
  for (const auto& e : gens) raw.emplace_back(n, std::span<const int>(e));
  return minimalize(n, std::move(raw));
}

std::vector<std::vector<int>> exponent_lists(const MonomialIdeal& a) {
  std::vector<std::vector<int>> out;
  for (const auto& m : a.gens()) {
    std::vector<int> e;
    for (int i = 0; i < a.ambient(); ++i) e.push_back(m[i]);
    out.push_back(std::move(e));
  }
  return out;
}

std::map<std::pair<int, int>, std::uint64_t> betti_dict(const MonomialIdeal& a, const std::string& field) {
  return betti_table_general(a, FieldSpec::parse(field)).entries();
}

py::dict classification_dict(const Graph& g, const std::string& field) {
  const ClassificationReport r = classify(g, FieldSpec::parse(field));
  py::dict d;
  d["sequentially_cm"] = r.sequentially_cm;
  d["cohen_macaulay"] = r.cohen_macaulay;
  d["gorenstein"] = r.gorenstein;
  d["nearly_gorenstein"] = r.nearly_gorenstein;
  d["unmixed"] = r.unmixed;
  d["matroidal_ic"] = r.matroidal_ic;
  d["matroidal_edge"] = r.matroidal_edge;
  d["dim"] = r.dim;
  py::dict w;
  for (const auto& [k, v] : r.witnesses) w[py::str(k)] = v;
  d["witnesses"] = w;
  d["consistent"] = r.consistent();
  return d;
}

}  // namespace

PYBIND11_MODULE(_cei, m) {
  m.doc() = "Complementary edge ideals of graphs: construction, Betti tables, classification.";

  py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);
  py::register_exception<ResourceGuard>(m, "ResourceGuard", PyExc_RuntimeError);

  py::class_<Graph>(m, "Graph")
      .def(py::init<int>(), py::arg("n"))
      .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges) {
             return Graph(n, std::span<const std::pair<int, int>>(edges));
           }),
           py::arg("n"), py::arg("edges"))
      .def_static("from_spec", &parse_family_spec, py::arg("spec"),
                  "Build from a family spec such as 'path:4' or 'union:complete:2,complete:2'.")
      .def_property_readonly("n", &Graph::order)
      .def_property_readonly("edges", &Graph::edges)
      .def("adjacent", &Graph::adjacent)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "Graph(" + std::to_string(g.order()) + ", " + std::to_string(g.size()) + " edges)";
      });

  py::class_<MonomialIdeal>(m, "MonomialIdeal")
      .def(py::init(&ideal_from_lists), py::arg("n"), py::arg("gens"),
           "Ideal generated by the given exponent vectors; stored minimally.")
      .def_property_readonly("n", &MonomialIdeal::ambient)
      .def_property_readonly("gens", &exponent_lists)
      .def("is_unit", &MonomialIdeal::is_unit)
      .def("is_zero", &MonomialIdeal::is_zero)
      .def("__len__", &MonomialIdeal::size)
      .def("__eq__", [](const MonomialIdeal& a, const MonomialIdeal& b) { return a == b; })
      .def("__str__", [](const MonomialIdeal& a) { return to_string(a); })
      .def("__repr__", [](const MonomialIdeal& a) { return "MonomialIdeal" + to_string(a); });

  m.def("edge_ideal", &edge_ideal);
  m.def("comp_edge_ideal", &comp_edge_ideal);
  m.def("comp_cover_ideal", &comp_cover_ideal);
  m.def("clique_ideal", &clique_ideal, py::arg("g"), py::arg("t"));
  m.def("veronese", &veronese, py::arg("n"), py::arg("d"));
  m.def("power", &power, py::arg("a"), py::arg("k"));
  m.def("symbolic_power", &symbolic_power, py::arg("a"), py::arg("k"));
  m.def("alexander_dual", &alexander_dual);
  m.def("complementary_ideal", &complementary_ideal);
  m.def(
      "primary_decomposition_ic",
      [](const Graph& g) {
        std::vector<std::vector<int>> out;
        for (const auto& p : primary_decomposition_ic(g).components()) {
          std::vector<int> vars;
          for (int i = 0; i < p.ambient; ++i)
            if (p.vars >> i & 1) vars.push_back(i + 1);
          out.push_back(std::move(vars));
        }
        return out;
      },
      "Minimal primes of I_c(G) as lists of 1-based variable indices.");

  m.def("betti_table", &betti_dict, py::arg("a"), py::arg("field") = "Q",
        "Graded Betti numbers of the ideal as {(i, j): count}.");
  m.def(
      "regularity", [](const MonomialIdeal& a, const std::string& f) { return regularity(a, FieldSpec::parse(f)); },
      py::arg("a"), py::arg("field") = "Q");
  m.def(
      "depth_quotient",
      [](const MonomialIdeal& a, const std::string& f) { return depth_quotient(a, FieldSpec::parse(f)); },
      py::arg("a"), py::arg("field") = "Q", "depth of S/I.");
  m.def(
      "is_componentwise_linear",
      [](const MonomialIdeal& a, const std::string& f) { return is_componentwise_linear(a, FieldSpec::parse(f)); },
      py::arg("a"), py::arg("field") = "Q");
  m.def("find_linear_quotients_order", &find_linear_quotients_order);
  m.def("verify_linear_quotients_order", &verify_linear_quotients_order);
  m.def("is_matroidal", &is_matroidal);

  m.def("classify", &classification_dict, py::arg("g"), py::arg("field") = "Q");
  m.def(
      "reg_power_forecast", [](const Graph& g, int k) { return reg_power_forecast(g, k).predicted_reg; },
      py::arg("g"), py::arg("k"));
  m.def("reg_jc_power_forecast", &reg_jc_power_forecast, py::arg("g"), py::arg("k"), py::arg("symbolic") = false);
  m.def(
      "chordal_lq_order",
      [](const Graph& g) {
        const ChordalOrder r = chordal_lq_order(g);
        return py::make_tuple(r.order, r.verified);
      },
      "Indices into comp_cover_ideal(g).gens in linear-quotients order, and whether it verified.");

  m.def(
      "run_suite",
      [](const std::string& name, std::optional<int> n_max, std::optional<int> kmax, unsigned jobs) {
        SweepOptions o;
        o.n_max = n_max;
        o.kmax = kmax;
        o.jobs = jobs;
        SweepReport r;
        {
          py::gil_scoped_release release;
          r = run_suite(name, o);
        }
        return py::make_tuple(r.passed(), r.summary());
      },
      py::arg("name"), py::arg("n_max") = py::none(), py::arg("kmax") = py::none(), py::arg("jobs") = 1,
      "Run a named sweep; returns (passed, summary text).");
}
