#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "aprot/coordination.hpp"
#include "aprot/modes.hpp"
#include "aprot/network.hpp"
#include "aprot/simplex.hpp"

namespace aprot {

struct OptimizerConfig {
  double d_min = 0.05;  // 3 cycles at 60 Hz
  double mct = 0.15;
  double alpha_i = 1.0;
  double alpha_v = 1.0;
  // Constraint levels; default to alpha_i for both I and V.
  std::optional<double> alpha_1;
  std::optional<double> alpha_2;
  double eta_i_min = 0.01;
  double eta_i_max = 5.0;
  double eta_v_min = 0.01;
  double eta_v_max = 5.0;
  double zeta_min = 0.0;
  double zeta_max = 100.0;
  double eta_i_start = 0.01;
  double eta_v_start = 0.01;
  double fd_step = 1e-3;
  double initial_step = 0.25;  // length of the first move in eta space
  double min_step = 1e-6;
  double gradient_tolerance = 1e-6;
  int max_iterations = 200;
  // Coarse scan per axis used when the start point is infeasible.
  int scan_points = 12;
  double pickup_margin = 1.25;
  double v_s = 0.9;
  bool strict = false;
  double certificate_tolerance = 1e-6;

  double level_1() const { return alpha_1.value_or(alpha_i); }
  double level_2() const { return alpha_2.value_or(alpha_i); }
  /// Throws DomainError on inconsistent values.
  void validate() const;
};

struct Pickups {
  std::vector<double> i_s;  // per relay, amps
  double v_s = 0.9;
  std::vector<std::string> warnings;
};

/// I_S = margin x rated current of the relay branch; V_S global. A margin
/// <= 1 is a warning, or an error in strict mode.
Pickups compute_pickups(const NetworkModel& model, const OptimizerConfig& config);

/// CVaR evaluation point of one relay's class statistics.
struct CvarPoint {
  double i = 0.0;
  double v = 0.0;
};
CvarPoint cvar_point(const ClassStats& stats, double alpha_i, double alpha_v);

enum class ConstraintKind { d_min, mct };

/// One row of the coordination LP with its fixed CVaR points.
struct CoordinationConstraint {
  ConstraintKind kind = ConstraintKind::d_min;
  std::size_t bus = 0;
  std::size_t primary = 0;
  std::size_t backup = 0;  // mct only
  CvarPoint primary_point;  // primary-class statistics of `primary`
  CvarPoint backup_point;   // backup-class statistics of `backup`
  std::string name;
};

struct ObjectiveTerm {
  std::size_t relay = 0;
  CvarPoint point;
};

/// The fixed-structure problem for one mode of a study. Variables are the
/// study relays in `relays` order.
struct ModeProblem {
  std::vector<std::size_t> relays;
  std::vector<double> i_s;  // per model relay
  double v_s = 0.9;
  std::vector<ObjectiveTerm> objective;
  std::vector<CoordinationConstraint> constraints;
  // Human-readable reasons for terms and constraints left out.
  std::vector<std::string> dropped;
};

/// Statistics of the relays in a mode, indexed by model relay (nullptr when
/// the relay is outside the study).
using ModeStatsView = std::vector<const ModeStats*>;

ModeProblem build_mode_problem(const NetworkModel& model, const std::vector<std::size_t>& relays,
                               const ModeStatsView& stats, const CoordinationGraph& graph, const Pickups& pickups,
                               const OptimizerConfig& config);

struct LpSolution {
  LpStatus status = LpStatus::infeasible;
  std::vector<double> zeta;  // per problem relay
  double objective = 0.0;
};

/// Linear program over zeta at fixed exponents.
LpProblem assemble_lp(const ModeProblem& problem, const OptimizerConfig& config, double eta_i, double eta_v);
LpSolution solve_lp_fixed_eta(const ModeProblem& problem, const OptimizerConfig& config, double eta_i, double eta_v);

struct ConstraintCheck {
  std::string name;
  double value = 0.0;  // t_op (d_min) or t_b - t_p (mct), seconds
  double bound = 0.0;
  bool satisfied = false;
};

struct Certificate {
  bool passed = false;
  double worst_slack = 0.0;
  double objective = 0.0;
  double recomputed_objective = 0.0;
  std::vector<ConstraintCheck> checks;
};

/// Re-evaluates every constraint from the curve formula at the given
/// settings.
Certificate verify_settings(const ModeProblem& problem, const OptimizerConfig& config, const std::vector<double>& zeta,
                            double eta_i, double eta_v, double reported_objective);

struct OptimizationResult {
  bool feasible = false;
  double eta_i = 0.0;
  double eta_v = 0.0;
  std::vector<double> zeta;  // per problem relay
  double objective = 0.0;
  std::vector<double> history;  // objective after each accepted outer step
  int iterations = 0;
  std::string stop_reason;
  Certificate certificate;
  // Names of an irreducible infeasible constraint subset when infeasible.
  std::vector<std::string> infeasible_subset;
  std::vector<std::string> diagnostics;
};

/// Outer projected gradient search over (eta_i, eta_v) with central finite
/// differences, re-solving the zeta LP at each probe.
OptimizationResult optimize_settings(const ModeProblem& problem, const OptimizerConfig& config);

/// Deletion filter: constraints whose joint presence keeps the LP infeasible.
std::vector<std::string> irreducible_infeasible_subset(const ModeProblem& problem, const OptimizerConfig& config,
                                                       double eta_i, double eta_v);

}  // namespace aprot
