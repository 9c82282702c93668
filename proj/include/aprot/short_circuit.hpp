#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "aprot/network.hpp"

namespace aprot {

/// Bolted or impedance fault position: a bus, or a point on a line at
/// fractional distance `distance` from its from-bus.
struct FaultLocation {
  enum class Kind { bus, branch };
  Kind kind = Kind::bus;
  std::size_t bus = 0;
  std::size_t branch = 0;
  double distance = 0.0;

  static FaultLocation at_bus(std::size_t bus) { return {Kind::bus, bus, 0, 0.0}; }
  static FaultLocation on_branch(std::size_t branch, double distance) {
    return {Kind::branch, 0, branch, distance};
  }
  /// Mid-line faults at d == 0 or d == 1 collapse onto the end bus.
  FaultLocation normalized(const NetworkModel& model) const;
  bool operator==(const FaultLocation&) const = default;
};

std::string describe(const NetworkModel& model, const FaultLocation& loc);

/// Monte Carlo draws that parametrize the sources of one fault solve.
struct SourceParams {
  double grid_scc_mva = 21.0;
  double grid_x_over_r = 10.0;
  // Per DG index; only read for inverter units.
  std::vector<double> inverter_ratio;

  /// Mid-range values of every model range.
  static SourceParams nominal(const NetworkModel& model, double grid_x_over_r = 10.0);
};

struct ShortCircuitOptions {
  double voltage_factor = 1.0;
  // Inverter fault current demand per unit voltage drop, before clipping.
  double inverter_k_factor = 2.0;
  int max_iterations = 50;
  double tolerance = 1e-8;
};

/// Two-terminal admittance element of the nodal system. `b == -1` denotes
/// ground. Off-nominal ratio applies on the `a` side.
struct NodalElement {
  int a = -1;
  int b = -1;
  Complex y;
  double ratio = 1.0;
};

/// Nodal admittance system of the energized network with a fault node.
struct NodalSystem {
  Eigen::MatrixXcd ybus;
  std::vector<int> bus_node;  // bus -> node, -1 when de-energized
  int fault_node = -1;
  std::vector<Complex> prefault;  // per node, volts
  // Series elements in stamping order; ground elements are the grid-forming
  // source impedances.
  std::vector<NodalElement> elements;
  // Norton source current per node (E * y_source), amps.
  std::vector<Complex> source_injection;
  // Inverter DG index per node, -1 when none.
  std::vector<int> inverter_dg;
  std::size_t size() const { return static_cast<std::size_t>(ybus.rows()); }
};

NodalSystem build_ybus(const EnergizedNetwork& net, const FaultLocation& fault, const SourceParams& params,
                       const ShortCircuitOptions& options = {});

struct FaultSolution {
  FaultLocation location;
  Complex zf;
  SourceParams params;
  std::vector<bool> bus_energized;
  std::vector<Complex> bus_voltage;     // volts, phase-to-neutral
  std::vector<Complex> bus_prefault;    // volts
  // Current at each end of each branch flowing into the branch, amps.
  // Zero for out-of-service branches.
  std::vector<Complex> branch_from_current;
  std::vector<Complex> branch_to_current;
  std::vector<bool> branch_energized;
  Complex fault_current;   // into the fault, amps
  Complex fault_voltage;   // at the fault point, volts
  Complex fault_prefault;  // volts
  std::vector<Complex> inverter_current;  // per DG, amps injected
  int iterations = 0;
  double fault_current_magnitude() const { return std::abs(fault_current); }
};

/// Thevenin solution from the bus impedance matrix with inverter current
/// sources found by fixed-point iteration.
FaultSolution solve_fault(const EnergizedNetwork& net, const FaultLocation& fault, Complex zf,
                          const SourceParams& params, const ShortCircuitOptions& options = {});

struct RelayMeasurement {
  double i_f = 0.0;  // amps, zero when reverse or de-energized
  double v_f = 1.0;  // pu of nominal phase voltage
  bool forward = false;
  double raw_current = 0.0;  // magnitude regardless of direction
};

RelayMeasurement relay_measurement(const NetworkModel& model, const FaultSolution& sol, std::size_t relay);
std::vector<RelayMeasurement> relay_measurements(const NetworkModel& model, const FaultSolution& sol);

/// Source impedance seen from the grid bus, ohms.
Complex grid_impedance(const NetworkModel& model, const ExternalGrid& grid, double scc_mva, double x_over_r,
                       double voltage_factor);
/// Machine plus transformer reactance of a synchronous DG, ohms.
Complex synchronous_impedance(const NetworkModel& model, const DistributedGenerator& dg);
/// Rated current of a DG at its bus voltage, amps.
double dg_rated_current(const NetworkModel& model, const DistributedGenerator& dg);

}  // namespace aprot
