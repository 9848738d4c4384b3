#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <chrono>
#include <sstream>

#include "splitgraph/circle.hpp"
#include "splitgraph/cli.hpp"
#include "splitgraph/conjugacy.hpp"
#include "splitgraph/correspondence.hpp"
#include "splitgraph/graph.hpp"
#include "splitgraph/moves.hpp"
#include "splitgraph/sse.hpp"
#include "splitgraph/text_format.hpp"

namespace py = pybind11;
using namespace splitgraph;

namespace {

using PyMatrix = std::vector<std::vector<py::int_>>;

py::int_ to_py(const BigInt& x) { return py::int_(py::module_::import("builtins").attr("int")(x.str())); }

PyMatrix to_py(const IntMatrix& m) {
  PyMatrix out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i].push_back(to_py(m(i, j)));
  return out;
}

IntMatrix from_py(const PyMatrix& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw DimensionError("ragged matrix");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = BigInt(py::str(rows[i][j]).cast<std::string>());
  }
  return m;
}

WitnessRoles roles_from(const std::string& text) {
  const auto roles = parse_roles(text);
  if (!roles) throw std::invalid_argument("roles must be 'A=RS,B=SR' or 'B=RS,A=SR'");
  return *roles;
}

SplitSpecFile spec_from(const DirectedGraph& g, const std::string& text, bool allow_empty) {
  return parse_split_spec(text, g, "<spec>", allow_empty);
}

py::dict witness_dict(const SseWitness& w) {
  py::dict d;
  d["R"] = to_py(w.r);
  d["S"] = to_py(w.s);
  d["roles"] = to_string(w.roles);
  return d;
}

}  // namespace

PYBIND11_MODULE(_splitgraph, m) {
  m.doc() = "Graph splittings, shift equivalence and conjugacy checks";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<SpecError>(m, "SpecError", PyExc_ValueError);
  py::register_exception<GraphError>(m, "GraphError", PyExc_ValueError);
  py::register_exception<DimensionError>(m, "DimensionError", PyExc_ValueError);
  py::register_exception<TooLargeError>(m, "TooLargeError", PyExc_RuntimeError);

  py::class_<DirectedGraph>(m, "Graph")
      .def(py::init([](const std::string& name, std::vector<std::string> vertices,
                       const std::vector<std::tuple<std::string, std::string, std::string>>& edges) {
             std::vector<DirectedGraph::EdgeRecord> records;
             for (const auto& [id, s, r] : edges) records.push_back({id, s, r});
             return DirectedGraph(name, std::move(vertices), records);
           }),
           py::arg("name"), py::arg("vertices"), py::arg("edges"))
      .def_static("parse", [](const std::string& text) { return parse_graph(text); })
      .def("to_text", &serialize_graph)
      .def("to_dot", &export_dot)
      .def_property_readonly("name", &DirectedGraph::name)
      .def_property_readonly("vertices",
                             [](const DirectedGraph& g) {
                               return std::vector<std::string>(g.vertices().begin(), g.vertices().end());
                             })
      .def_property_readonly("edges",
                             [](const DirectedGraph& g) {
                               std::vector<std::tuple<std::string, std::string, std::string>> out;
                               for (const auto& e : g.edges()) out.emplace_back(e.id, g.vertex(e.source), g.vertex(e.range));
                               return out;
                             })
      .def("adjacency", [](const DirectedGraph& g) { return to_py(adjacency_matrix(g)); })
      .def("dual", &dual_graph)
      .def("power", &power_graph, py::arg("n"))
      .def("reversed", &reversed_graph)
      .def("paths", [](const DirectedGraph& g, std::size_t n) {
        std::vector<std::string> out;
        for (const auto& p : paths(g, n)) out.push_back(path_label(g, p));
        return out;
      })
      .def("__eq__", [](const DirectedGraph& a, const DirectedGraph& b) { return a == b; })
      .def("__repr__", [](const DirectedGraph& g) {
        return "<Graph " + g.name() + ": " + std::to_string(g.vertex_count()) + " vertices, " +
               std::to_string(g.edge_count()) + " edges>";
      });

  m.def("is_isomorphic", [](const DirectedGraph& g, const DirectedGraph& h) { return are_isomorphic(g, h).has_value(); });

  m.def(
      "split",
      [](const DirectedGraph& g, const std::string& spec, bool allow_empty) {
        const auto file = spec_from(g, spec, allow_empty);
        return file.is_in_split() ? apply_in_split(g, file.in()) : apply_out_split(g, file.out(), allow_empty);
      },
      py::arg("graph"), py::arg("spec"), py::arg("allow_empty") = false,
      "Apply an in-split or out-split given in the text spec format.");

  m.def(
      "in_split_partition",
      [](const DirectedGraph& g, const std::string& w, const std::vector<std::vector<std::string>>& classes) {
        EdgePartition p;
        for (const auto& c : classes) {
          p.emplace_back();
          for (const auto& e : c) p.back().push_back(g.edge_index(e));
        }
        return apply_in_split(g, in_split_from_partition(g, g.vertex_index(w), p));
      },
      py::arg("graph"), py::arg("vertex"), py::arg("classes"));

  m.def(
      "out_split_partition",
      [](const DirectedGraph& g, const std::string& w, const std::vector<std::vector<std::string>>& classes) {
        EdgePartition p;
        for (const auto& c : classes) {
          p.emplace_back();
          for (const auto& e : c) p.back().push_back(g.edge_index(e));
        }
        return apply_out_split(g, out_split_from_partition(g, g.vertex_index(w), p));
      },
      py::arg("graph"), py::arg("vertex"), py::arg("classes"));

  m.def(
      "witness",
      [](const DirectedGraph& g, const std::string& spec, bool allow_empty) {
        const auto file = spec_from(g, spec, allow_empty);
        return witness_dict(file.is_in_split() ? in_split_witness(g, file.in()) : out_split_witness(g, file.out()));
      },
      py::arg("graph"), py::arg("spec"), py::arg("allow_empty") = false);

  m.def(
      "check_sse",
      [](const PyMatrix& a, const PyMatrix& b, const PyMatrix& r, const PyMatrix& s, const std::string& roles) {
        const auto check = check_elementary_sse(from_py(a), from_py(b), SseWitness{from_py(r), from_py(s), roles_from(roles)});
        py::dict d;
        d["passed"] = check.passed();
        d["report"] = check.to_string();
        return d;
      },
      py::arg("A"), py::arg("B"), py::arg("R"), py::arg("S"), py::arg("roles") = "A=RS,B=SR");

  m.def(
      "search_sse",
      [](const PyMatrix& a, const PyMatrix& b, unsigned bound, double budget_seconds) {
        const auto budget = std::chrono::milliseconds(static_cast<long long>(budget_seconds * 1000));
        const IntMatrix ma = from_py(a), mb = from_py(b);
        SearchResult result;
        {
          py::gil_scoped_release release;
          result = search_elementary_sse(ma, mb, bound, budget);
        }
        py::dict d;
        d["status"] = to_string(result.status);
        d["reason"] = result.reason;
        d["nodes"] = result.nodes;
        d["witness"] = result.witness ? py::object(witness_dict(*result.witness)) : py::none();
        return d;
      },
      py::arg("A"), py::arg("B"), py::arg("bound") = 2, py::arg("budget_seconds") = 10.0);

  m.def("traces", [](const PyMatrix& a, std::size_t n) {
    std::vector<py::int_> out;
    for (const auto& t : trace_sequence(from_py(a), n)) out.push_back(to_py(t));
    return out;
  });

  m.def(
      "char_poly",
      [](const PyMatrix& a) {
        const Polynomial p = weighted_char_poly(from_py(a));
        std::vector<py::int_> out;
        for (const auto& c : p.coefficients()) out.push_back(to_py(c));
        return out;
      },
      "Ascending coefficients of det(I - uA).");

  m.def("bowen_franks", [](const PyMatrix& a) {
    const auto bf = bowen_franks(from_py(a));
    py::dict d;
    std::vector<py::int_> torsion;
    for (const auto& t : bf.torsion()) torsion.push_back(to_py(t));
    d["torsion"] = torsion;
    d["free_rank"] = bf.free_rank;
    d["det_sign"] = bf.det_sign;
    d["det"] = to_py(bf.det);
    return d;
  });

  m.def(
      "conjugacy_certificate",
      [](const DirectedGraph& g, const std::string& spec, std::size_t window) {
        const auto file = spec_from(g, spec, false);
        const auto code = file.is_in_split() ? in_split_block_code(g, file.in()) : out_split_block_code(g, file.out());
        const auto report = verify_certificate(code, window);
        py::dict d;
        d["passed"] = report.passed();
        d["source_paths"] = report.source_paths;
        d["target_paths"] = report.target_paths;
        d["image_size"] = report.image_size;
        d["failures"] = report.failures;
        return d;
      },
      py::arg("graph"), py::arg("spec"), py::arg("window") = 2);

  m.def(
      "correspondence_check",
      [](const DirectedGraph& g, const std::string& spec) {
        const auto file = spec_from(g, spec, false);
        py::dict d;
        if (file.is_in_split()) {
          const auto rep = insplit_correspondence(g, file.in());
          d["passed"] = rep.passed();
          d["dimension"] = rep.module.dimension();
          d["failures"] = rep.failures;
        } else {
          const auto rep = outsplit_correspondence(g, file.out());
          d["passed"] = rep.passed();
          d["dimension"] = rep.module.dimension();
          d["failures"] = rep.failures;
        }
        return d;
      },
      py::arg("graph"), py::arg("spec"));

  m.def("component_count", &component_count, py::arg("k1"), py::arg("k2"));

  m.def(
      "circle_split",
      [](long long mm, long long n, long long a, long long b, bool outsplit, long long grid) {
        const auto e = power_circle_graph(mm, n);
        const auto split = outsplit ? circle_out_split(e, a, b) : circle_in_split(e, a, b);
        auto pieces = [](const CircleMap& map) {
          std::vector<std::pair<long long, std::string>> out;
          for (const auto& p : map) out.emplace_back(p.exponent, p.rotation.to_string());
          return out;
        };
        py::dict d;
        d["components"] = split.graph.edge_components;
        d["r"] = pieces(split.graph.r);
        d["s"] = pieces(split.graph.s);
        if (grid > 0) d["grid_passed"] = verify_parametrization(split.product, grid).passed();
        return d;
      },
      py::arg("m"), py::arg("n"), py::arg("a"), py::arg("b"), py::arg("outsplit") = false, py::arg("grid") = 0);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Run a command-line subcommand; returns (exit code, stdout, stderr).");
}
