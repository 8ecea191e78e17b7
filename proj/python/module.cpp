#include "contractad/hamiltonian.hpp"
#include "contractad/koszul.hpp"
#include "contractad/planeq.hpp"
#include "contractad/series.hpp"
#include "contractad/symfun.hpp"
#include "contractad/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace contractad;

namespace {

py::int_ big_to_py(const Int& v) { return py::int_(py::str(v.str())); }

py::object rational_to_py(const Rational& v) {
    py::object fractions = py::module_::import("fractions");
    return fractions.attr("Fraction")(numerator(v).str(), denominator(v).str());
}

std::vector<py::int_> series_ints(const RationalSeries& s) {
    std::vector<py::int_> out;
    for (const auto& c : s.coeffs) out.push_back(big_to_py(numerator(c)));
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact Hamiltonian path/cycle counting, realizable tuples, Koszul "
              "complex homology, and generating series";

    py::class_<Graph>(m, "Graph")
        .def(py::init([](const std::string& spec) { return parse_graph(spec); }), py::arg("spec"))
        .def_readonly("n", &Graph::n)
        .def("edges", &Graph::edges)
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__",
             [](const Graph& g) { return "Graph(n=" + std::to_string(g.n) + ")"; });

    m.def("parse_graph", &parse_graph, py::arg("spec"));
    m.def("complement", &complement);
    m.def("path_graph", &path_graph);
    m.def("cycle_graph", &cycle_graph);
    m.def("complete_graph", &complete_graph);
    m.def("complete_multipartite", &complete_multipartite);

    m.def("hp_count", [](const Graph& g) { return hp_count(g); });
    m.def("hc_count", [](const Graph& g) { return hc_count(g); });
    m.def("acyclic_orientation_count",
          [](const Graph& g) { return big_to_py(acyclic_orientation_count(g)); });
    m.def("planeq_count", [](const Graph& g) { return planeq_count(g); });
    m.def("cyceq_count", [](const Graph& g) { return cyceq_count(g); });
    m.def("is_planeq", &is_planeq, py::arg("graph"), py::arg("tuple"));
    m.def("is_separable", &is_separable);
    m.def("avoiders",
          [](int n, const std::vector<Pattern>& patterns) { return avoiders(n, patterns); });
    m.def("b_p_patterns", &b_p_patterns);
    m.def("b_c_patterns", &b_c_patterns);

    m.def("hertzsprung", [](int order) { return series_ints(hertzsprung(order)); });
    m.def("cyclic_hertzsprung", [](int order) {
        std::vector<py::int_> out;
        for (const auto& v : cyclic_hertzsprung_numbers(order)) out.push_back(big_to_py(v));
        return out;
    });
    m.def("schroder", [](int order) { return series_ints(schroder_series(order)); });

    m.def("hp_multipartite",
          [](int k, const IntegerPartition& lambda) { return big_to_py(hp_multipartite(k, lambda)); });
    m.def("hc_multipartite",
          [](int k, const IntegerPartition& lambda) { return big_to_py(hc_multipartite(k, lambda)); });

    m.def("verify_identities", [](int max_n, int jobs) {
        SweepResult r = sweep_identities(max_n, {}, jobs);
        py::dict out;
        out["graphs_checked"] = r.graphs_checked;
        out["checks_run"] = r.checks_run;
        out["passed"] = r.all_pass();
        py::list fails;
        for (const auto& f : r.failures) {
            py::dict d;
            d["identity"] = f.check.identity;
            d["n"] = f.n;
            d["edge_list"] = f.edge_list;
            d["lhs"] = f.check.lhs;
            d["rhs"] = f.check.rhs;
            fails.append(d);
        }
        out["counterexamples"] = fails;
        return out;
    }, py::arg("max_n"), py::arg("jobs") = 0);

    m.def("koszul_betti", [](const Graph& g, const std::string& module) {
        RationalChainComplex c =
            module == "ham" ? build_ham_koszul(g) : build_cycham_koszul(g);
        return homology_ranks(c);
    }, py::arg("graph"), py::arg("module") = "ham");

    m.def("young_series", [](const std::string& name, int max_weight) {
        SymSeries s = young_generating(builtin(name), max_weight);
        py::list out;
        for (const auto& [key, value] : s.terms)
            out.append(py::make_tuple(key.first, key.second, rational_to_py(value)));
        return out;
    }, py::arg("name"), py::arg("max_weight") = 5);

    py::register_exception<budget_error>(m, "BudgetError");
}
