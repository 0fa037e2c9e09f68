#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "distideal/atlas.hpp"
#include "distideal/atlas_scan.hpp"
#include "distideal/conformance.hpp"
#include "distideal/distance_ideals.hpp"
#include "distideal/graph.hpp"
#include "distideal/int_matrix.hpp"

namespace py = pybind11;
using namespace distideal;

namespace {

// Python ints of arbitrary size go through their decimal form.
py::list to_python(const std::vector<Integer>& v) {
    py::list out;
    for (const auto& x : v) out.append(py::int_(py::str(x.get_str())));
    return out;
}

IntMatrix from_python(const std::vector<std::vector<py::int_>>& rows) {
    const std::size_t c = rows.empty() ? 0 : rows[0].size();
    IntMatrix m(rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != c) throw std::invalid_argument("ragged matrix");
        for (std::size_t j = 0; j < c; ++j) m(i, j) = Integer(py::str(rows[i][j]).cast<std::string>());
    }
    return m;
}

TrivialityOptions options(bool rational, std::size_t budget, std::uint64_t seed) {
    TrivialityOptions t;
    if (rational) t.domain = CoefficientDomain::Rationals;
    t.groebner.budget = budget;
    t.seed = seed;
    return t;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Distance ideals of graphs (native core). Graphs are passed as graph6 strings.";

    py::register_exception<GraphError>(m, "GraphError", PyExc_ValueError);
    py::register_exception<PolyError>(m, "PolyError", PyExc_ValueError);

    const TrivialityOptions defaults;

    m.def("parse_graph_file", [](const std::string& text) {
        std::vector<std::string> out;
        for (const auto& g : parse_graph_file(text)) out.push_back(emit_graph6(g));
        return out;
    });
    m.def("edges", [](const std::string& g6) { return parse_graph6(g6).edges(); });
    m.def("from_edges", [](int n, const std::vector<std::pair<int, int>>& e) { return emit_graph6(Graph(n, e)); });
    m.def("distance_matrix", [](const std::string& g6) { return distances(parse_graph6(g6)); });

    m.def("snf", [](const std::vector<std::vector<py::int_>>& rows) {
        return to_python(snf(from_python(rows)).invariant_factors);
    }, "Invariant factors of an integer matrix.");
    m.def("determinant", [](const std::vector<std::vector<py::int_>>& rows) {
        return py::int_(py::str(determinant(from_python(rows)).get_str()));
    });
    m.def("distance_snf", [](const std::string& g6) {
        return to_python(snf(distance_matrix(parse_graph6(g6))).invariant_factors);
    });

    m.def("ideal_json", [](const std::string& g6, std::size_t i, bool rational, std::size_t budget, std::uint64_t seed) {
        Graph g = parse_graph6(g6);
        py::gil_scoped_release release;
        return verdict_json(g, i, ideal_triviality(g, i, options(rational, budget, seed))).dump();
    }, py::arg("graph6"), py::arg("i"), py::arg("rational") = false, py::arg("budget") = defaults.groebner.budget,
       py::arg("seed") = defaults.seed);

    m.def("phi_json", [](const std::string& g6, bool rational, std::size_t budget, std::uint64_t seed) {
        Graph g = parse_graph6(g6);
        py::gil_scoped_release release;
        auto opts = options(rational, budget, seed);
        return phi_json(g, rational ? phi_over_rationals(g, opts) : phi_trivial_count(g, opts)).dump();
    }, py::arg("graph6"), py::arg("rational") = false, py::arg("budget") = defaults.groebner.budget,
       py::arg("seed") = defaults.seed);

    m.def("scan_json", [](const std::string& g6, const std::string& family) {
        Graph g = parse_graph6(g6);
        Family f = parse_family(family);
        py::gil_scoped_release release;
        return scan_json(is_connected(g) ? full_scan(g, f) : forbidden_scan(g, f)).dump();
    }, py::arg("graph6"), py::arg("family") = "F");

    m.def("enumerate_connected", [](int n) {
        std::vector<std::string> out;
        for (const auto& g : enumerate_connected_graphs(n)) out.push_back(emit_graph6(g));
        return out;
    });
    m.def("enumerate_trees", [](int n) {
        std::vector<std::string> out;
        for (const auto& g : enumerate_trees(n)) out.push_back(emit_graph6(g));
        return out;
    });
    m.def("canonical_graph6", [](const std::string& g6) { return emit_graph6(canonical_form(parse_graph6(g6))); });

    m.def("atlas", [] {
        std::vector<std::pair<std::string, std::string>> out;
        for (const auto& e : atlas_entries()) out.emplace_back(e.name, emit_graph6(e.graph));
        return out;
    });
    m.def("forbidden_family", [] {
        std::vector<std::string> out(forbidden_family_names().begin(), forbidden_family_names().end());
        return out;
    });

    m.def("lemma_ids", &lemma_ids);
    m.def("run_lemma_json", [](const std::string& id, std::size_t budget) {
        HarnessOptions opts;
        opts.groebner.budget = budget;
        py::gil_scoped_release release;
        return report_json(run_lemma(id, opts)).dump();
    }, py::arg("id"), py::arg("budget") = GroebnerOptions{}.budget);
}
