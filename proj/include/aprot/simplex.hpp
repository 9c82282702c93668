#pragma once

#include <cstddef>
#include <limits>
#include <string>
#include <vector>

namespace aprot {

enum class RowSense { le, ge, eq };

struct LpRow {
  std::vector<double> coeffs;  // dense, one per variable
  RowSense sense = RowSense::le;
  double rhs = 0.0;
  std::string name;
};

/// minimize c'x subject to rows and lo <= x <= hi.
struct LpProblem {
  std::vector<double> cost;
  std::vector<LpRow> rows;
  std::vector<double> lower;
  std::vector<double> upper;  // +inf allowed

  std::size_t variables() const { return cost.size(); }
};

enum class LpStatus { optimal, infeasible, unbounded, iteration_limit };
const char* to_string(LpStatus s);

struct LpResult {
  LpStatus status = LpStatus::infeasible;
  std::vector<double> x;
  double objective = std::numeric_limits<double>::quiet_NaN();
  std::size_t pivots = 0;
};

struct LpOptions {
  double tolerance = 1e-9;
  std::size_t max_pivots = 50000;
};

/// Dense two-phase primal simplex on an equilibrated tableau. Dantzig pricing
/// with a switch to Bland's rule after a run of degenerate pivots.
LpResult solve_lp(const LpProblem& lp, const LpOptions& options = {});

/// Largest violation of any row or bound at x (0 when feasible).
double max_violation(const LpProblem& lp, const std::vector<double>& x);

}  // namespace aprot
