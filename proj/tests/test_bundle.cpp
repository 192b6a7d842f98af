#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "enl/bundle.hpp"
#include "enl/tasks.hpp"

#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace enl;

namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const EnlError& e) {
    return e.kind();
  }
  FAIL("expected an EnlError");
  return ErrorKind::ValidationError;
}

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(ENL_BUNDLE_DIR) + "/" + name);
  REQUIRE(in.good());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::vector<Report::Status> statuses(const std::vector<Report>& reports) {
  std::vector<Report::Status> out;
  for (const Report& r : reports) out.push_back(r.status);
  return out;
}

constexpr auto PASS = Report::Status::Pass;
constexpr auto FAIL_ = Report::Status::Fail;

} // namespace

TEST_CASE("parsing the shipped bundles") {
  Bundle ex1 = parse_bundle(slurp("ex1.json"));
  CHECK(ex1.lie_algebras.size() == 2);
  CHECK(ex1.operators.size() == 2);
  CHECK(ex1.cobrackets.size() == 1);
  CHECK(ex1.tasks.size() == 10);
  CHECK(ex1.algebra("g4").c.at(0, 1, 1) == 1);
  CHECK(ex1.algebra("g4").c.at(1, 0, 1) == -1); // antisymmetric fill
  CHECK(ex1.op("N").matrix.at(3, 2) == 1);
  CHECK(ex1.cobracket("ex1").delta.d.at(2, 3, 2) == -1); // wedge fill

  Bundle empty = parse_bundle("{}");
  CHECK(empty.lie_algebras.empty());
  CHECK(empty.tasks.empty());
  CHECK(run_all(empty).empty());
  CHECK(report_exit_code(run_all(empty)) == 0);
}

TEST_CASE("parse failures") {
  CHECK(kind_of([] { parse_bundle("{"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_bundle("[1,2]"); }) == ErrorKind::ValidationError);
  CHECK(kind_of([] { parse_bundle(R"({"surprise": {}})"); }) ==
        ErrorKind::ValidationError);

  // brackets must be normalized with i < j
  CHECK(kind_of([] {
          parse_bundle(R"({"lie_algebras": {"g": {
            "dim": 3, "brackets": [[2, 1, 2, "1"]]}}})");
        }) == ErrorKind::ValidationError);

  // dimensions are capped at 64
  CHECK(kind_of([] {
          parse_bundle(R"({"lie_algebras": {"g": {"dim": 65}}})");
        }) == ErrorKind::DimensionCap);

  // cross-references must resolve
  CHECK(kind_of([] {
          parse_bundle(R"({"operators": {"E": {
            "on": "ghost", "matrix": [["1"]]}}})");
        }) == ErrorKind::UnknownName);

  // rationals must be strict "p/q"
  CHECK(kind_of([] {
          parse_bundle(R"({"lie_algebras": {"g": {
            "dim": 2, "brackets": [[0, 1, 0, "1.5"]]}}})");
        }) == ErrorKind::ParseError);
}

TEST_CASE("serialization round-trips byte-identically") {
  for (const char* name :
       {"ex1.json", "ex2.json", "sl2_rb.json",
        "prelie_dim2.json"}) {
    Bundle b = parse_bundle(slurp(name));
    const std::string once = serialize_bundle(b);
    const std::string twice = serialize_bundle(parse_bundle(once));
    CHECK(once == twice);
  }
}

TEST_CASE("running the first worked example") {
  Bundle b = parse_bundle(slurp("ex1.json"));
  std::vector<Report> reports = run_all(b);
  REQUIRE(reports.size() == 10);
  CHECK(statuses(reports) ==
        std::vector<Report::Status>{PASS, PASS, PASS, PASS, PASS, FAIL_, PASS,
                                    FAIL_, PASS, PASS});

  const Report& nstar = reports[5];
  CHECK(nstar.name == "equivariant_Nstar");
  REQUIRE(nstar.witness.has_value());
  CHECK(nstar.witness->names == std::vector<std::string>{"X3*", "X4*"});
  CHECK(nstar.witness->lhs == "X3*");
  CHECK(nstar.witness->rhs == "0");

  const Report& enl_level = reports[7];
  CHECK(enl_level.code == "dual_equivariance");

  // the equivariant deformation keeps only [X1,X2] = X2
  const Report& deform = reports[8];
  const OrderedJson& dg = deform.outputs["lie_algebras"]["deform_g4_g"];
  CHECK(dg["brackets"] ==
        OrderedJson::parse(R"([[0, 1, 1, "1"]])"));

  // the general deformation of the dual keeps only [X3*,X4*] = -X3*
  const Report& dstar = reports[9];
  const OrderedJson& dh = dstar.outputs["lie_algebras"]["deform_gstar_g"];
  CHECK(dh["brackets"] ==
        OrderedJson::parse(R"([[2, 3, 2, "-1"]])"));

  CHECK(report_exit_code(reports) == 1);

  // golden failure line, byte-exact
  const std::string text = emit_report(reports, ReportFormat::text);
  CHECK(text.find("FAIL check_equivariant(gstar,Nstar) "
                  "witness=[X3*,X4*] got=X3* expected=0\n") !=
        std::string::npos);

  // reports are deterministic across runs
  CHECK(emit_report(run_all(b), ReportFormat::text) == text);
  CHECK(emit_report(run_all(b), ReportFormat::json) ==
        emit_report(reports, ReportFormat::json));
}

TEST_CASE("running the second worked example") {
  Bundle b = parse_bundle(slurp("ex2.json"));
  std::vector<Report> reports = run_all(b);
  REQUIRE(reports.size() == 8);
  for (const Report& r : reports) CHECK(r.status == PASS);
  CHECK(report_exit_code(reports) == 0);

  // the double is 8-dimensional with the hyperbolic pairing attached
  const Report& dbl = reports[5];
  CHECK(dbl.outputs["lie_algebras"]["dbl_d"]["dim"] == 8);
  CHECK(dbl.outputs.contains("bilinear_forms"));
  CHECK(dbl.outputs["operators"]["dbl_E"]["matrix"][0][0] == "1");
  CHECK(dbl.outputs["rmatrices"]["dbl_r"]["matrix"][0][4] == "1");
}

TEST_CASE("running the quadratic Rota-Baxter bundle") {
  Bundle b = parse_bundle(slurp("sl2_rb.json"));
  std::vector<Report> reports = run_all(b);
  REQUIRE(reports.size() == 9);
  for (const Report& r : reports) CHECK(r.status == PASS);
  CHECK(report_exit_code(reports) == 0);

  // the constructed r-matrix equals the stored golden one
  const Report& rbs = reports[4];
  const OrderedJson& built = rbs.outputs["rmatrices"]["rbs_r"]["matrix"];
  CHECK(matrix_from_json(built, "test") == b.rmatrix("r_sl2").r);
}

TEST_CASE("running the pre-Lie bundle") {
  Bundle b = parse_bundle(slurp("prelie_dim2.json"));
  std::vector<Report> reports = run_all(b);
  REQUIRE(reports.size() == 7);
  CHECK(statuses(reports) ==
        std::vector<Report::Status>{PASS, PASS, PASS, FAIL_, PASS, PASS, PASS});
  CHECK(report_exit_code(reports) == 1);

  const std::string text = emit_report(reports, ReportFormat::text);
  CHECK(text.find("FAIL check_pre_enl(p2,N0,strong) "
                  "witness=[X1,X1] got=0 expected=X2\n") != std::string::npos);
}

TEST_CASE("task errors and exit codes") {
  Bundle b = parse_bundle(R"({
    "lie_algebras": {"g": {"dim": 2, "brackets": [[0, 1, 1, "1"]]}},
    "tasks": {
      "ok": {"kind": "check_lie", "algebra": "g"},
      "missing": {"kind": "check_lie", "algebra": "ghost"},
      "odd": {"kind": "frobnicate", "algebra": "g"}
    }
  })");
  std::vector<Report> reports = run_all(b);
  REQUIRE(reports.size() == 3);
  CHECK(reports[0].status == PASS);
  CHECK(reports[1].status == Report::Status::Error);
  CHECK(reports[1].code == "UnknownName");
  CHECK(reports[2].status == Report::Status::Error);
  CHECK(reports[2].code == "UnknownTask");
  CHECK(report_exit_code(reports) == 2);

  const std::string text = emit_report(reports, ReportFormat::text);
  CHECK(text.find("ERROR check_lie(ghost) UnknownName:") != std::string::npos);

  // asking for an undeclared task throws instead of reporting
  CHECK(kind_of([&] { run_task(b, "nope"); }) == ErrorKind::UnknownTask);
}

TEST_CASE("json report format carries the witness") {
  Bundle b = parse_bundle(slurp("ex1.json"));
  Report rep = run_task(b, "equivariant_Nstar");
  const std::string out = emit_report({rep}, ReportFormat::json);
  OrderedJson j = OrderedJson::parse(out);
  REQUIRE(j.size() == 1);
  CHECK(j[0]["status"] == "fail");
  CHECK(j[0]["display"] == "check_equivariant(gstar,Nstar)");
  CHECK(j[0]["witness"]["names"] ==
        OrderedJson::parse(R"(["X3*", "X4*"])"));
  CHECK(j[0]["witness"]["got"] == "X3*");
  CHECK(j[0]["witness"]["expected"] == "0");
}

TEST_CASE("merging constructed outputs back into a bundle") {
  Bundle b = parse_bundle(R"({
    "lie_algebras": {"g4": {
      "dim": 4,
      "basis": ["X1", "X2", "X3", "X4"],
      "brackets": [[0, 1, 1, "1"], [2, 3, 3, "1"]]
    }},
    "cobrackets": {"ex1": {"on": "g4", "entries": [[2, 2, 3, "1"], [3, 2, 3, "1"]]}},
    "tasks": {"dual": {"kind": "dualize", "cobracket": "ex1"}}
  })");
  Report rep = run_task(b, "dual");
  CHECK(rep.status == PASS);

  Bundle merged = merge_outputs(b, rep);
  const LieAlgebra& gstar = merged.algebra("dual_g");
  CHECK(gstar.dim == 4);
  CHECK(gstar.basis[2] == "X3*");
  CHECK(gstar.c.at(2, 3, 2) == 1);
  CHECK(gstar.c.at(2, 3, 3) == 1);
  CHECK(check_lie(gstar).pass);

  // merging the same outputs twice collides
  CHECK(kind_of([&] { merge_outputs(merged, rep); }) ==
        ErrorKind::ValidationError);
}
