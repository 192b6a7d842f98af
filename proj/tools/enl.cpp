#include "enl/operators.hpp"
#include "enl/tasks.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw enl::EnlError(enl::ErrorKind::ParseError,
                        "cannot read \"" + path + "\"");
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw enl::EnlError(enl::ErrorKind::ValidationError,
                        "cannot write \"" + path + "\"");
  }
  out << text;
}

int run_check(const std::string& bundle_path, const std::string& task,
              const std::string& format, bool timings) {
  const enl::Bundle bundle = enl::parse_bundle(read_file(bundle_path));
  std::vector<enl::Report> reports;
  if (task.empty()) {
    reports = enl::run_all(bundle);
  } else {
    reports.push_back(enl::run_task(bundle, task));
  }
  const enl::ReportFormat fmt = format == "json" ? enl::ReportFormat::json
                                                 : enl::ReportFormat::text;
  std::cout << enl::emit_report(reports, fmt, timings);
  return enl::report_exit_code(reports);
}

/// Parses key=value construct arguments into a task parameter object.
/// Integer-looking values become JSON integers, true/false booleans,
/// everything else stays a string (entity names, rationals).
enl::OrderedJson params_from_args(const std::string& kind,
                                  const std::vector<std::string>& args) {
  enl::OrderedJson params = enl::OrderedJson::object();
  params["kind"] = kind;
  for (const std::string& arg : args) {
    const size_t eq = arg.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw enl::EnlError(enl::ErrorKind::ValidationError,
                          "construct arguments must look like key=value, got \"" +
                              arg + "\"");
    }
    const std::string key = arg.substr(0, eq);
    const std::string value = arg.substr(eq + 1);
    bool integral = !value.empty();
    for (size_t i = 0; i < value.size(); ++i) {
      const bool digit = value[i] >= '0' && value[i] <= '9';
      if (!digit && !(i == 0 && value[i] == '-' && value.size() > 1)) {
        integral = false;
        break;
      }
    }
    if (integral) {
      params[key] = std::stoll(value);
    } else if (value == "true" || value == "false") {
      params[key] = value == "true";
    } else {
      params[key] = value;
    }
  }
  return params;
}

int run_construct(const std::string& kind,
                  const std::vector<std::string>& args,
                  const std::string& bundle_path, const std::string& out_path) {
  static const std::set<std::string> kConstructKinds{
      "double",     "bicross",   "semidirect", "descendent",
      "hierarchy",  "rbs_rmatrix", "rk_lift",  "canonical_r",
      "centroid",   "dualize",   "deform"};
  if (!kConstructKinds.count(kind)) {
    throw enl::EnlError(enl::ErrorKind::UnknownTask,
                        "unknown construct kind \"" + kind + "\"");
  }
  const enl::Bundle bundle = enl::parse_bundle(read_file(bundle_path));

  std::string task_name = kind;
  bool taken = true;
  while (taken) {
    taken = false;
    for (const auto& [name, entry] : bundle.tasks) taken = taken || name == task_name;
    if (taken) task_name += "_";
  }

  enl::Bundle staged = bundle;
  enl::TaskEntry entry;
  entry.kind = kind;
  entry.params = params_from_args(kind, args);
  staged.tasks.emplace_back(task_name, std::move(entry));

  const enl::Report report = enl::run_task(staged, task_name);
  std::cout << enl::emit_report({report}, enl::ReportFormat::text);
  if (report.status != enl::Report::Status::Error) {
    const enl::Bundle merged = enl::merge_outputs(bundle, report);
    write_file(out_path, enl::serialize_bundle(merged));
  }
  return enl::report_exit_code({report});
}

int run_solve(const std::string& what, const std::string& algebra,
              const std::string& bundle_path) {
  if (what != "centroid") {
    throw enl::EnlError(enl::ErrorKind::UnknownTask,
                        "unknown solve target \"" + what + "\"");
  }
  const enl::Bundle bundle = enl::parse_bundle(read_file(bundle_path));
  const std::vector<enl::MatrixQ> basis =
      enl::centroid_basis(bundle.algebra(algebra));
  enl::OrderedJson out = enl::OrderedJson::object();
  for (size_t k = 0; k < basis.size(); ++k) {
    enl::OrderedJson body = enl::OrderedJson::object();
    body["on"] = algebra;
    body["matrix"] = enl::matrix_to_json(basis[k]);
    out[algebra + "_centroid_" + std::to_string(k)] = std::move(body);
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact structure-constant calculator for operator-equipped "
               "Lie, pre-Lie and bialgebra structures"};
  app.require_subcommand(1);

  std::string bundle_path, task, format = "text", kind, out_path, algebra,
              solve_what;
  std::vector<std::string> construct_args;
  bool timings = false;

  CLI::App* check = app.add_subcommand("check", "run a bundle's check tasks");
  check->add_option("bundle", bundle_path, "bundle JSON file")->required();
  check->add_option("--task", task, "run a single named task");
  check->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  check->add_flag("--timings", timings, "append wall-clock times");

  CLI::App* construct =
      app.add_subcommand("construct", "run a construction and write a bundle");
  construct->add_option("kind", kind, "construction kind")->required();
  construct->add_option("args", construct_args,
                        "key=value parameters, then the bundle path");
  construct->add_option("--out", out_path, "output bundle file")->required();

  CLI::App* solve = app.add_subcommand("solve", "solve for operator families");
  solve->add_option("what", solve_what, "currently: centroid")->required();
  solve->add_option("--algebra", algebra, "algebra name")->required();
  solve->add_option("bundle", bundle_path, "bundle JSON file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) {
      return run_check(bundle_path, task, format, timings);
    }
    if (construct->parsed()) {
      // The final positional is the bundle path; the rest are parameters.
      if (construct_args.empty()) {
        throw enl::EnlError(enl::ErrorKind::ValidationError,
                            "construct needs a bundle path");
      }
      const std::string path = construct_args.back();
      construct_args.pop_back();
      return run_construct(kind, construct_args, path, out_path);
    }
    if (solve->parsed()) {
      return run_solve(solve_what, algebra, bundle_path);
    }
  } catch (const enl::EnlError& e) {
    std::cout << "ERROR " << enl::error_kind_name(e.kind()) << ": " << e.what()
              << "\n";
    return 2;
  }
  return 0;
}
