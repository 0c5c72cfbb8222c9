#pragma once

#include <stdexcept>
#include <string>

namespace hpade {

/// Failure categories raised by the library. Each maps onto a CLI exit code
/// through `exit_code`.
enum class errc {
  precision_mismatch,
  division_by_zero,
  non_unit_leading_term,
  inexact_operation,
  insufficient_data,
  all_zero_solution,
  pole_at_evaluation_point,
  dimension_mismatch,
  non_generic_case,
  no_convergence,
  invalid_params,
  seed_mismatch,
  on_branch_cut,
  on_set,
  point_at_origin,
  inadmissible_budget,
  parse_error,
  dangling_reference,
  step_failure,
  io_error,
};

inline const char* to_string(errc code) {
  switch (code) {
    case errc::precision_mismatch: return "PrecisionMismatch";
    case errc::division_by_zero: return "DivisionByZero";
    case errc::non_unit_leading_term: return "NonUnitLeadingTerm";
    case errc::inexact_operation: return "InexactOperation";
    case errc::insufficient_data: return "InsufficientData";
    case errc::all_zero_solution: return "AllZeroSolution";
    case errc::pole_at_evaluation_point: return "PoleAtEvaluationPoint";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::non_generic_case: return "NonGenericCase";
    case errc::no_convergence: return "NoConvergence";
    case errc::invalid_params: return "InvalidParams";
    case errc::seed_mismatch: return "SeedMismatch";
    case errc::on_branch_cut: return "OnBranchCut";
    case errc::on_set: return "OnSet";
    case errc::point_at_origin: return "PointAtOrigin";
    case errc::inadmissible_budget: return "InadmissibleBudget";
    case errc::parse_error: return "ParseError";
    case errc::dangling_reference: return "DanglingReference";
    case errc::step_failure: return "StepFailure";
    case errc::io_error: return "IoError";
  }
  return "Unknown";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

/// 3 for numerical non-convergence, 2 for every contract violation.
inline int exit_code(errc code) { return code == errc::no_convergence ? 3 : 2; }

}  // namespace hpade
