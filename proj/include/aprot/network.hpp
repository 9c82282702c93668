#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace aprot {

using Complex = std::complex<double>;

enum class BranchKind { line, transformer };
enum class DgKind { inverter, synchronous };

struct Bus {
  std::string id;
  double nominal_kv = 0.0;
  // Buses hosting the external grid are normally not fault candidates.
  bool faultable = true;
};

struct Branch {
  std::string id;
  std::size_t from_bus = 0;
  std::size_t to_bus = 0;
  Complex z_ohm;
  double rated_amps = 0.0;
  BranchKind kind = BranchKind::line;
  // Off-nominal ratio on the from side (transformers only).
  double ratio = 1.0;
};

struct SwitchDevice {
  std::string id;
  std::size_t branch = 0;
};

struct ExternalGrid {
  std::string id;
  std::size_t bus = 0;
  double scc_mva_min = 0.0;
  double scc_mva_max = 0.0;
  double x_over_r = 10.0;
};

struct DistributedGenerator {
  std::string id;
  std::size_t bus = 0;
  DgKind kind = DgKind::synchronous;
  double rating_mva = 0.0;
  // Inverter units: short-circuit to nominal current ratio range.
  double sc_ratio_min = 0.0;
  double sc_ratio_max = 0.0;
  // Synchronous units: subtransient reactance on the unit rating.
  double subtransient_x_pu = 0.0;
  // Step-up transformer, modeled as a series reactance on the connection.
  double transformer_mva = 0.0;
  double transformer_x_pu = 0.0;
};

/// Directional relay "R<at>-<toward>" located at `at_bus`, looking along
/// `branch` toward `toward_bus`.
struct Relay {
  std::string id;
  std::size_t at_bus = 0;
  std::size_t toward_bus = 0;
  std::size_t branch = 0;
};

/// Static description of the grid. Immutable once parsed.
class NetworkModel {
 public:
  NetworkModel() = default;

  std::vector<Bus> buses;
  std::vector<Branch> branches;
  std::vector<SwitchDevice> switches;
  std::vector<SwitchDevice> pccs;
  std::vector<ExternalGrid> sources;
  std::vector<DistributedGenerator> dgs;
  std::vector<Relay> relays;
  double base_kv = 12.47;
  double freq_hz = 60.0;

  /// Rebuilds the id lookup tables and checks every invariant. Throws
  /// SchemaError / ReferenceError on violation.
  void finalize();

  std::size_t bus_index(std::string_view id) const;
  std::size_t branch_index(std::string_view id) const;
  std::size_t relay_index(std::string_view id) const;
  std::optional<std::size_t> find_bus(std::string_view id) const;
  std::optional<std::size_t> find_branch(std::string_view id) const;
  std::optional<std::size_t> find_relay(std::string_view id) const;

  /// Discrete topology features in dataset column order: switches, pccs, dgs.
  std::vector<std::string> feature_names() const;
  std::size_t feature_count() const { return switches.size() + pccs.size() + dgs.size(); }
  std::optional<std::size_t> find_feature(std::string_view name) const;

  /// Phase-to-neutral nominal voltage of a bus in volts.
  double phase_voltage(std::size_t bus) const;

  /// Branches that carry at least one relay.
  std::vector<bool> relayed_branches() const;

 private:
  std::unordered_map<std::string, std::size_t> bus_ids_;
  std::unordered_map<std::string, std::size_t> branch_ids_;
  std::unordered_map<std::string, std::size_t> relay_ids_;
};

/// Parses the JSON network description. Keys starting with '_' are
/// annotations and ignored; any other unknown key is a schema violation.
NetworkModel parse_network(std::string_view text);
NetworkModel load_network(const std::string& path);

/// Switch, PCC and DG statuses. Serializes to the fixed-order feature vector
/// returned by NetworkModel::feature_names().
struct TopologyState {
  std::vector<bool> switch_closed;
  std::vector<bool> pcc_closed;
  std::vector<bool> dg_in_service;

  static TopologyState all_closed(const NetworkModel& model);
  static TopologyState from_features(const NetworkModel& model, const std::vector<std::uint8_t>& features);
  std::vector<std::uint8_t> to_features() const;
  bool covers(const NetworkModel& model) const;

  /// Sets a feature by name ("S1", "PC2", "DG3", ...).
  void set(const NetworkModel& model, std::string_view feature, bool value);

  friend bool operator==(const TopologyState&, const TopologyState&) = default;
};

/// Breakers opened by relays during a fault. A relay trip opens its own end of
/// the branch; the other end stays closed.
struct BreakerState {
  std::vector<bool> from_open;
  std::vector<bool> to_open;

  explicit BreakerState(std::size_t branch_count = 0)
      : from_open(branch_count, false), to_open(branch_count, false) {}
  bool any_open(std::size_t branch) const { return from_open[branch] || to_open[branch]; }
  void open_end(const NetworkModel& model, std::size_t branch, std::size_t at_bus);
  bool end_open(const NetworkModel& model, std::size_t branch, std::size_t at_bus) const;
};

/// Energized view of the model under a topology. Grid-forming sources are the
/// external grids behind closed PCC paths and in-service synchronous DGs.
class EnergizedNetwork {
 public:
  const NetworkModel& model() const { return *model_; }
  const TopologyState& state() const { return state_; }
  const BreakerState& breakers() const { return breakers_; }

  /// Branch is closed (switches/PCCs) and no breaker end is open.
  bool branch_in_service(std::size_t branch) const { return in_service_[branch]; }
  bool branch_energized(std::size_t branch) const { return branch_energized_[branch]; }
  bool bus_energized(std::size_t bus) const { return bus_energized_[bus]; }
  bool dg_in_service(std::size_t dg) const { return state_.dg_in_service[dg]; }
  /// Switch/PCC status of the branch, ignoring relay breakers.
  bool branch_closed(std::size_t branch) const { return closed_[branch]; }
  /// Connected-component id per bus over in-service branches.
  int component(std::size_t bus) const { return component_[bus]; }
  std::size_t energized_branch_count() const;

 private:
  friend EnergizedNetwork apply_topology(const NetworkModel&, const TopologyState&, const BreakerState&);
  const NetworkModel* model_ = nullptr;
  TopologyState state_;
  BreakerState breakers_;
  std::vector<bool> closed_;
  std::vector<bool> in_service_;
  std::vector<bool> branch_energized_;
  std::vector<bool> bus_energized_;
  std::vector<int> component_;
};

/// Resolves the energized subgraph. The model must outlive the result.
EnergizedNetwork apply_topology(const NetworkModel& model, const TopologyState& state,
                                const BreakerState& breakers);
EnergizedNetwork apply_topology(const NetworkModel& model, const TopologyState& state);

double max_load_current(const NetworkModel& model, std::string_view branch_id);

}  // namespace aprot
