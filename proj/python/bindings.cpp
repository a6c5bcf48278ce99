#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "rdegree/batch.hpp"
#include "rdegree/error.hpp"
#include "rdegree/family.hpp"
#include "rdegree/format.hpp"
#include "rdegree/indices.hpp"
#include "rdegree/io.hpp"
#include "rdegree/verifier.hpp"

namespace py = pybind11;
using namespace rdegree;

namespace {

py::int_ to_py(const BigInt& value) {
  PyObject* obj = PyLong_FromString(value.str().c_str(), nullptr, 10);
  if (!obj) throw py::error_already_set();
  return py::reinterpret_steal<py::int_>(obj);
}

py::object to_py(const Rational& value) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_py(boost::multiprecision::numerator(value)),
                  to_py(boost::multiprecision::denominator(value)));
}

Family family_arg(const std::string& name) {
  if (auto f = parse_family(name)) return *f;
  throw py::value_error("unknown family '" + name + "'");
}

template <typename E>
E enum_arg(const std::string& name, std::initializer_list<E> all, std::string_view (*namer)(E)) {
  for (E e : all) {
    if (namer(e) == name) return e;
  }
  throw py::value_error("unknown name '" + name + "'");
}

py::dict report_dict(const IndexReport& r) {
  py::dict d;
  d["n"] = r.n;
  d["m"] = r.m;
  d["r1"] = to_py(r.r1);
  d["r2"] = to_py(r.r2);
  d["r3"] = to_py(r.r3);
  d["abc"] = r.abc;
  d["ga"] = r.ga;
  d["h"] = r.h;
  d["chi"] = r.chi;
  d["zagreb1"] = r.zagreb1;
  d["zagreb2"] = r.zagreb2;
  d["randic"] = r.randic;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "R degrees, R indices and classical degree-based topological indices";

  static py::exception<Error> error_type(m, "RDegreeError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::handle(error_type.ptr())(e.what());
      exc.attr("code") = std::string(to_string(e.code()));
      PyErr_SetObject(error_type.ptr(), exc.ptr());
    }
  });

  py::class_<Graph>(m, "Graph")
      .def(py::init([](std::size_t n, const std::vector<Edge>& edges) { return Graph::build(n, edges); }),
           py::arg("n"), py::arg("edges"))
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("size", &Graph::size)
      .def_property_readonly("edges", &Graph::edges)
      .def("degree", &Graph::degree, py::arg("v"))
      .def("neighbors",
           [](const Graph& g, VertexId v) {
             auto nb = g.neighbors(v);
             return std::vector<VertexId>(nb.begin(), nb.end());
           },
           py::arg("v"))
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "<Graph order=" + std::to_string(g.order()) + " size=" + std::to_string(g.size()) + ">";
      });

  m.def("is_connected", &is_connected, py::arg("graph"));
  m.def("generate_family",
        [](const std::string& family, std::size_t n) { return generate_family({family_arg(family), n}); },
        py::arg("family"), py::arg("n"));
  m.def("random_connected", &generate_random_connected, py::arg("n"), py::arg("edge_probability"),
        py::arg("seed"));

  m.def("parse_edge_list", [](const std::string& text) { return parse_edge_list(text).graph; },
        py::arg("text"));
  m.def("write_edge_list", [](const Graph& g) {
    std::ostringstream out;
    write_edge_list(g, out);
    return out.str();
  });
  m.def("parse_graph6", &parse_graph6, py::arg("line"));
  m.def("write_graph6", &write_graph6, py::arg("graph"));

  m.def("r_degrees",
        [](const Graph& g) {
          py::list rows;
          for (const auto& row : r_degree_table(g)) {
            rows.append(py::make_tuple(to_py(row.sum), to_py(row.mult), to_py(row.r)));
          }
          return rows;
        },
        py::arg("graph"), "List of (S_v, M_v, r(v)) per vertex.");

  m.def("r1_index", [](const Graph& g) { return to_py(r1_index(g)); }, py::arg("graph"));
  m.def("r2_index", [](const Graph& g) { return to_py(r2_index(g)); }, py::arg("graph"));
  m.def("r3_index", [](const Graph& g) { return to_py(r3_index(g)); }, py::arg("graph"));
  m.def("abc_index", &abc_index, py::arg("graph"));
  m.def("ga_index", &ga_index, py::arg("graph"));
  m.def("h_index", &h_index, py::arg("graph"));
  m.def("chi_index", &chi_index, py::arg("graph"));
  m.def("full_report", [](const Graph& g) { return report_dict(full_report(g)); }, py::arg("graph"));

  m.def("closed_form",
        [](const std::string& family, const std::string& index, const std::string& source, std::size_t n) {
          const auto* v = find_variant(
              family_arg(family), enum_arg(index, {RIndex::R1, RIndex::R2, RIndex::R3}, index_name),
              enum_arg(source, {Source::PaperStatement, Source::PaperProof, Source::Corrected}, source_name));
          if (!v) throw py::value_error("no closed form registered for that combination");
          return to_py(closed_form(*v, n));
        },
        py::arg("family"), py::arg("index"), py::arg("source"), py::arg("n"));

  m.def("verify",
        [](const std::string& family, std::size_t first, std::size_t last) {
          const auto report = family == "all" ? verify_all(first, last)
                                              : verify_family(family_arg(family), first, last);
          py::list rows;
          for (const auto& row : report.rows) {
            py::dict d;
            d["family"] = std::string(family_name(row.family));
            d["index"] = std::string(index_name(row.index));
            d["n"] = row.n;
            d["source"] = std::string(source_name(row.source));
            d["claimed"] = row.claimed ? to_py(*row.claimed) : py::none();
            d["computed"] = row.computed ? py::object(to_py(*row.computed)) : py::none();
            d["verdict"] = std::string(verdict_name(row.verdict));
            rows.append(d);
          }
          return rows;
        },
        py::arg("family"), py::arg("first"), py::arg("last"));

  m.def("batch_csv",
        [](const std::string& graph6_text, unsigned jobs, const std::string& indices) {
          std::istringstream in(graph6_text);
          std::vector<CorpusLine> lines = read_graph6_corpus(in);
          std::vector<BatchRow> rows;
          {
            py::gil_scoped_release release;
            rows = run_batch(lines, jobs);
          }
          std::ostringstream out;
          write_batch_csv(rows, parse_index_selection(indices), out);
          return out.str();
        },
        py::arg("graph6_text"), py::arg("jobs") = 1, py::arg("indices") = "all");
}
