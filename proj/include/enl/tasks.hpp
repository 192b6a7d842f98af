#ifndef ENL_TASKS_HPP
#define ENL_TASKS_HPP

#include "enl/bundle.hpp"
#include "enl/verdict.hpp"

#include <optional>
#include <string>
#include <vector>

namespace enl {

/// Outcome of one task: PASS/FAIL carry the verdict of the dispatched
/// check (constructs pass when they succeed and their attached verdicts
/// hold); ERROR carries the error kind and message. Constructed outputs are
/// serialized as bundle sections under `outputs`.
struct Report {
  enum class Status { Pass, Fail, Error };

  std::string name;    ///< task key in the bundle
  std::string display; ///< canonical rendering, e.g. "check_lie(g4)"
  Status status = Status::Pass;
  std::string code;    ///< failing clause, or error kind name
  std::optional<Witness> witness;
  std::string detail;  ///< error message text
  OrderedJson outputs = OrderedJson::object();
  long long wall_ms = -1;
};

/// Runs one declared task. Errors inside the task are captured in the
/// report; an unknown task name throws UnknownTask.
Report run_task(const Bundle& b, const std::string& name);

/// Runs every declared task in declaration order.
std::vector<Report> run_all(const Bundle& b);

enum class ReportFormat { text, json };

/// text: one line per task, `PASS|FAIL|ERROR <display> [witness...]`.
/// json: stable-key serialization of all report fields.
/// Wall times are included only when `timings` is set, keeping default
/// output byte-identical across runs.
std::string emit_report(const std::vector<Report>& reports, ReportFormat format,
                        bool timings = false);

/// 0 if all pass, 1 if any FAIL (and no ERROR), 2 if any ERROR.
int report_exit_code(const std::vector<Report>& reports);

/// Merges a report's constructed outputs into a copy of the bundle so the
/// result can be written out and re-checked.
Bundle merge_outputs(const Bundle& b, const Report& report);

} // namespace enl

#endif
