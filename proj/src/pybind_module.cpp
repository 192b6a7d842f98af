/// Python bindings: the bundle/task engine plus direct entry points to the
/// most used exact-tensor operations. All matrices cross the boundary as
/// nested lists of reduced rational strings, tensors as sparse
/// [i, j, k, "c"] entries.

#include "enl/bundle.hpp"
#include "enl/lie.hpp"
#include "enl/operators.hpp"
#include "enl/tasks.hpp"
#include "enl/yang_baxter.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace py = pybind11;

namespace {

using namespace enl;

using Rows = std::vector<std::vector<std::string>>;
using SparseOut = std::vector<std::tuple<int, int, int, std::string>>;

LieAlgebra algebra_from_json(const std::string& text) {
  OrderedJson inner;
  try {
    inner = OrderedJson::parse(text);
  } catch (const std::exception& e) {
    throw EnlError(ErrorKind::ParseError, e.what());
  }
  OrderedJson root = OrderedJson::object();
  root["lie_algebras"] = OrderedJson::object();
  root["lie_algebras"]["g"] = std::move(inner);
  return parse_bundle(root.dump()).algebra("g");
}

MatrixQ matrix_from_rows(const Rows& rows, const std::string& where) {
  OrderedJson j = OrderedJson::array();
  for (const auto& row : rows) {
    OrderedJson r = OrderedJson::array();
    for (const auto& cell : row) r.push_back(cell);
    j.push_back(std::move(r));
  }
  return matrix_from_json(j, where);
}

Rows matrix_to_rows(const MatrixQ& m) {
  Rows out(m.rows(), std::vector<std::string>(m.cols()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out[i][j] = rat_str(m.at(i, j));
  return out;
}

SparseOut tensor_to_entries(const Tensor3Q& t) {
  SparseOut out;
  for (int i = 0; i < t.d0(); ++i)
    for (int j = 0; j < t.d1(); ++j)
      for (int k = 0; k < t.d2(); ++k)
        if (t.at(i, j, k) != 0)
          out.emplace_back(i, j, k, rat_str(t.at(i, j, k)));
  return out;
}

py::dict verdict_to_dict(const Verdict& v) {
  py::dict d;
  d["pass"] = v.pass;
  d["code"] = v.code;
  if (v.witness) {
    py::dict w;
    w["indices"] = v.witness->indices;
    w["names"] = v.witness->names;
    w["got"] = v.witness->lhs;
    w["expected"] = v.witness->rhs;
    d["witness"] = std::move(w);
  } else {
    d["witness"] = py::none();
  }
  return d;
}

ReportFormat format_of(const std::string& format) {
  if (format == "json") return ReportFormat::json;
  if (format == "text") return ReportFormat::text;
  throw EnlError(ErrorKind::ValidationError,
                 "format must be \"text\" or \"json\", got \"" + format +
                     "\"");
}

} // namespace

PYBIND11_MODULE(_enl, m) {
  m.doc() = "Exact structure-constant calculator for operator-equipped Lie, "
            "pre-Lie and bialgebra structures";
  m.attr("__version__") = "0.1.0";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const EnlError& e) {
      const std::string msg =
          std::string(error_kind_name(e.kind())) + ": " + e.what();
      PyErr_SetString(PyExc_ValueError, msg.c_str());
    }
  });

  m.def(
      "run_all",
      [](const std::string& bundle, const std::string& format, bool timings) {
        const Bundle b = parse_bundle(bundle);
        const std::vector<Report> reports = run_all(b);
        return py::make_tuple(emit_report(reports, format_of(format), timings),
                              report_exit_code(reports));
      },
      py::arg("bundle"), py::arg("format") = "text", py::arg("timings") = false,
      "Run every task a bundle declares, in declaration order. Returns "
      "(rendered report, exit code).");

  m.def(
      "run_task",
      [](const std::string& bundle, const std::string& name,
         const std::string& format) {
        const Bundle b = parse_bundle(bundle);
        const std::vector<Report> reports = {run_task(b, name)};
        return py::make_tuple(emit_report(reports, format_of(format), false),
                              report_exit_code(reports));
      },
      py::arg("bundle"), py::arg("name"), py::arg("format") = "text",
      "Run one named task. Returns (rendered report, exit code).");

  m.def(
      "construct",
      [](const std::string& bundle, const std::string& name) -> py::tuple {
        const Bundle b = parse_bundle(bundle);
        const Report report = run_task(b, name);
        const std::string line =
            emit_report({report}, ReportFormat::text, false);
        if (report.status == Report::Status::Error) {
          return py::make_tuple(line, py::none());
        }
        return py::make_tuple(line,
                              serialize_bundle(merge_outputs(b, report)));
      },
      py::arg("bundle"), py::arg("name"),
      "Run one named task and fold its outputs back into the bundle. "
      "Returns (report line, merged bundle text), with None in place of "
      "the bundle when the task errored.");

  m.def(
      "check_lie",
      [](const std::string& algebra) {
        return verdict_to_dict(check_lie(algebra_from_json(algebra)));
      },
      py::arg("algebra"),
      "Antisymmetry and the Jacobi identity for an algebra given as JSON "
      "{dim, basis, brackets}.");

  m.def(
      "check_equivariant",
      [](const std::string& algebra, const Rows& e) {
        const LieAlgebra g = algebra_from_json(algebra);
        return verdict_to_dict(
            check_equivariant(g, matrix_from_rows(e, "operator matrix")));
      },
      py::arg("algebra"), py::arg("matrix"),
      "E[x,y] = [Ex,y] = [x,Ey] over the mixed basis pairs.");

  m.def(
      "centroid_basis",
      [](const std::string& algebra) {
        std::vector<Rows> out;
        for (const MatrixQ& e : centroid_basis(algebra_from_json(algebra)))
          out.push_back(matrix_to_rows(e));
        return out;
      },
      py::arg("algebra"),
      "Basis of the space of equivariant operators, echelon-normalized.");

  m.def(
      "nijenhuis_torsion",
      [](const std::string& algebra, const Rows& n) {
        const LieAlgebra g = algebra_from_json(algebra);
        return tensor_to_entries(
            nijenhuis_torsion(g, matrix_from_rows(n, "operator matrix")));
      },
      py::arg("algebra"), py::arg("matrix"),
      "Nonzero entries of the Nijenhuis torsion, as [i, j, k, value].");

  m.def(
      "schouten",
      [](const std::string& algebra, const Rows& r) {
        const LieAlgebra g = algebra_from_json(algebra);
        return tensor_to_entries(
            schouten(g, matrix_from_rows(r, "r-matrix")));
      },
      py::arg("algebra"), py::arg("matrix"),
      "Nonzero entries of the Schouten bracket [[r,r]], as "
      "[i, j, k, value].");

  m.def(
      "check_en_rmatrix",
      [](const std::string& algebra, const Rows& r, const Rows& e) {
        const LieAlgebra g = algebra_from_json(algebra);
        return verdict_to_dict(
            check_en_rmatrix(g, matrix_from_rows(r, "r-matrix"),
                             matrix_from_rows(e, "operator matrix")));
      },
      py::arg("algebra"), py::arg("r"), py::arg("e"),
      "[[r,r]] = 0 together with E r = r E^T for an equivariant E.");
}
