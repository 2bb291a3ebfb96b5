#pragma once

#include <variant>
#include <vector>

#include "shadowcover/linalg.hpp"

namespace shadowcover {

// a . x <= b
struct LinearConstraint {
  RatVector a;
  Rational b;
};

// maximize objective . x subject to the constraints; variable j is
// additionally bounded by x_j >= 0 when nonneg[j] is set (an empty nonneg
// list means all variables are free).
struct LPProblem {
  RatVector objective;
  std::vector<LinearConstraint> constraints;
  std::vector<bool> nonneg;

  std::size_t num_vars() const { return objective.size(); }
  bool is_nonneg(std::size_t j) const { return !nonneg.empty() && nonneg[j]; }

  // The explicit rows followed by one row -x_j <= 0 per nonnegative
  // variable, in variable order. Farkas multipliers index this list.
  std::vector<LinearConstraint> expanded_rows() const;
};

struct LPOptimal {
  RatVector point;
  Rational value;
};

// lambda >= 0 over expanded_rows() with sum lambda_i a_i = 0 and
// sum lambda_i b_i < 0.
struct LPInfeasible {
  std::vector<Rational> multipliers;
};

// A ray r with a_i . r <= 0 for every row and objective . r > 0, starting
// from the feasible `point`.
struct LPUnbounded {
  RatVector point;
  RatVector ray;
};

using LPOutcome = std::variant<LPOptimal, LPInfeasible, LPUnbounded>;

// Two-phase dense tableau simplex over exact rationals with Bland's rule.
// Every outcome is re-verified by substitution before it is returned; a
// failed verification throws std::logic_error.
LPOutcome solve_lp(const LPProblem& problem);

bool verify_outcome(const LPProblem& problem, const LPOutcome& outcome);

}  // namespace shadowcover
