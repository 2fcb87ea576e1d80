#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "hypercol/certify.hpp"
#include "hypercol/cnf.hpp"
#include "hypercol/construction.hpp"
#include "hypercol/hgr_io.hpp"

namespace py = pybind11;
using namespace hypercol;

namespace {

py::int_ to_py(const BigInt& v) {
    return py::int_(py::reinterpret_steal<py::object>(PyLong_FromString(v.str().c_str(), nullptr, 10)));
}

BigInt from_py(const py::int_& v) { return BigInt(py::str(static_cast<py::handle>(v)).cast<std::string>()); }

std::vector<Edge> edge_list(const Hypergraph& h) {
    std::vector<Edge> out;
    out.reserve(h.num_edges());
    for (std::size_t i = 0; i < h.num_edges(); ++i)
        out.emplace_back(h.edge(i).begin(), h.edge(i).end());
    return out;
}

py::tuple provenance_tuple(const VertexProvenance& p) {
    switch (p.kind) {
    case VertexProvenance::Kind::kCopy:
        return py::make_tuple("COPY", p.a, p.b);
    case VertexProvenance::Kind::kNew:
        return py::make_tuple("NEW", p.a, p.b);
    case VertexProvenance::Kind::kBase:
        break;
    }
    return py::make_tuple("BASE");
}

}  // namespace

PYBIND11_MODULE(_hypercol, m) {
    m.doc() = "Degenerate triangle-free hypergraph construction and exact colouring";

    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);
    py::register_exception<BoundExceeded>(m, "BoundExceeded", PyExc_RuntimeError);
    py::register_exception<DecodeError>(m, "DecodeError", PyExc_RuntimeError);
    py::register_exception<SizeRefused>(m, "SizeRefused", PyExc_RuntimeError);

    py::class_<Hypergraph>(m, "Hypergraph")
        .def(py::init<std::size_t, std::size_t, std::vector<Edge>>(), py::arg("n"), py::arg("r"),
             py::arg("edges"))
        .def_property_readonly("n", &Hypergraph::num_vertices)
        .def_property_readonly("r", &Hypergraph::uniformity)
        .def_property_readonly("num_edges", &Hypergraph::num_edges)
        .def_property_readonly("edges", &edge_list)
        .def_property_readonly("duplicates_dropped", &Hypergraph::duplicates_dropped)
        .def("degree", [](const Hypergraph& h, VertexId v) { return degree(h, v); })
        .def("induced", [](const Hypergraph& h, std::vector<VertexId> keep) { return induced(h, keep); })
        .def("to_hgr", &to_hgr)
        .def_static("from_hgr", [](const std::string& text) { return parse_hgr(text); })
        .def(py::self == py::self)
        .def("__repr__", [](const Hypergraph& h) {
            std::ostringstream s;
            s << "<Hypergraph n=" << h.num_vertices() << " m=" << h.num_edges()
              << " r=" << h.uniformity() << '>';
            return s.str();
        });

    m.def("complete_uniform", &complete_uniform, py::arg("n"), py::arg("r"));
    m.def("is_proper", [](const Hypergraph& h, std::vector<std::uint32_t> colors) {
        return is_proper(h, Coloring::from_colors(std::move(colors)));
    });

    m.def("build_base", &build_base, py::arg("r"));
    m.def("predict_sizes", [](std::size_t r, std::size_t d) {
        const auto s = predict_sizes(r, d);
        py::dict out;
        out["V"] = to_py(s.vertices);
        out["E"] = to_py(s.edges);
        out["numS"] = to_py(s.num_s);
        return out;
    }, py::arg("r"), py::arg("d"));
    m.def("build", [](std::size_t r, std::size_t d, py::int_ cap) {
        return build({r, d}, from_py(cap));
    }, py::arg("r"), py::arg("d"), py::arg("cap") = py::int_(1000000));
    m.def("build_with_provenance", [](std::size_t r, std::size_t d, py::int_ cap) {
        auto c = build_with_provenance({r, d}, from_py(cap));
        py::list prov;
        for (const auto& p : c.provenance)
            prov.append(provenance_tuple(p));
        return py::make_tuple(std::move(c.graph), prov);
    }, py::arg("r"), py::arg("d"), py::arg("cap") = py::int_(1000000));

    m.def("degeneracy", [](const Hypergraph& h) {
        auto res = degeneracy(h);
        return py::make_tuple(res.degeneracy, res.order.order, res.order.step_degrees);
    });
    m.def("is_d_degenerate", &is_d_degenerate);
    m.def("find_triangle", [](const Hypergraph& h) -> py::object {
        auto t = find_triangle(h);
        if (!t)
            return py::none();
        return py::make_tuple(py::make_tuple(t->edge_indices[0], t->edge_indices[1],
                                             t->edge_indices[2]),
                              t->vertices);
    });
    m.def("greedy_color", [](const Hypergraph& h) {
        return greedy_color(h, degeneracy(h).order).colors();
    });
    m.def("k_colorable", [](const Hypergraph& h, std::size_t k, std::uint64_t budget,
                            bool parallel) -> py::object {
        ColorSearch res;
        {
            py::gil_scoped_release release;
            res = k_colorable(h, k, {budget, parallel});
        }
        if (res.status == SearchStatus::kBudgetExceeded)
            throw BudgetExceeded(budget);
        if (!res.coloring)
            return py::none();
        return py::cast(res.coloring->colors());
    }, py::arg("h"), py::arg("k"), py::arg("budget") = 100'000'000, py::arg("parallel") = false);
    m.def("chromatic_number", [](const Hypergraph& h, std::size_t kmax, std::uint64_t budget) {
        py::gil_scoped_release release;
        return chromatic_number(h, kmax, {budget, false});
    }, py::arg("h"), py::arg("kmax"), py::arg("budget") = 100'000'000);
    m.def("min_color_class_size", [](const Hypergraph& h, std::size_t k, std::uint64_t budget) {
        py::gil_scoped_release release;
        return min_color_class_size(h, k, budget);
    }, py::arg("h"), py::arg("k"), py::arg("budget") = 100'000'000);

    m.def("encode_k_coloring", [](const Hypergraph& h, std::size_t k, bool symmetry_break) {
        const auto f = encode_k_coloring(h, k, symmetry_break);
        std::ostringstream s;
        write_dimacs(s, f);
        return s.str();
    }, py::arg("h"), py::arg("k"), py::arg("symmetry_break") = false,
       "DIMACS text of the k-colouring formula");
    m.def("decode", [](const std::vector<bool>& assignment, const Hypergraph& h, std::size_t k) {
        return decode(assignment, h, k).colors();
    });
    m.def("parse_solver_output", [](const std::string& text) {
        const auto out = parse_solver_output(text);
        const char* status = out.status == SolverOutcome::Status::kSat     ? "SAT"
                             : out.status == SolverOutcome::Status::kUnsat ? "UNSAT"
                                                                           : "UNKNOWN";
        return py::make_tuple(status, out.model);
    });
}
