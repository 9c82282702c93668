#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "aprot/network.hpp"
#include "aprot/short_circuit.hpp"

namespace aprot {

enum class FaultClass : std::uint8_t { primary = 0, backup = 1, other = 2 };
inline constexpr std::size_t kFaultClassCount = 3;

const char* to_string(FaultClass c);
FaultClass fault_class_from_string(std::string_view s);

struct UniformRange {
  double lo = 0.0;
  double hi = 0.0;
};

/// Monte Carlo distributions over uncertain fault factors.
struct DistributionSpec {
  UniformRange fault_r_ohm{0.0, 3.0};
  UniformRange fault_x_ohm{0.0, 3.0};
  UniformRange grid_scc_mva{20.0, 22.0};
  UniformRange inverter_ratio{1.1, 1.3};
  double grid_x_over_r = 10.0;
  double p_switch_closed = 0.5;
  double p_pcc_closed = 0.5;
  double p_dg_in_service = 0.5;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::size_t max_draws = 1000;

  /// Throws DomainError on an invalid spec.
  void validate() const;
};

struct Scenario {
  std::size_t index = 0;
  TopologyState topology;
  FaultLocation location;
  Complex zf;
  SourceParams params;
  // Topology redraws needed before a faultable element was energized.
  std::size_t redraws = 0;
};

/// Deterministic per-scenario random stream seed derived from (seed, index).
std::uint64_t scenario_stream_seed(std::uint64_t seed, std::size_t index);

/// Energized fault candidates: faultable buses and line branches.
std::vector<FaultLocation> fault_candidates(const EnergizedNetwork& net);

Scenario sample_scenario(const NetworkModel& model, const DistributionSpec& spec, std::size_t index);

/// Buses reachable from the fault location through energized branches that
/// carry no relay. Grid-forming sources in this zone are beyond the reach of
/// line protection and handled by their own interconnection protection.
std::vector<bool> unrelayed_zone(const EnergizedNetwork& net, const FaultLocation& fault);

/// True when no grid-forming source outside the unrelayed zone remains
/// connected to the fault point through closed branches and breakers.
bool fault_isolated(const EnergizedNetwork& net, const FaultLocation& fault);

/// Graph labeling of every relay for a fault. `forward[r]` says whether relay
/// r measures forward fault current. A forward relay is primary when no other
/// same-direction relay lies between it and the fault, backup when exactly one
/// does, other otherwise. Reverse relays are other.
std::vector<FaultClass> classify_faults(const EnergizedNetwork& net, const FaultLocation& fault,
                                        const std::vector<bool>& forward);
FaultClass classify_fault(const EnergizedNetwork& net, const FaultLocation& fault, const std::vector<bool>& forward,
                          std::size_t relay);

/// Number of same-direction relays between `relay` and the fault along the
/// best path leaving through the relay's toward bus, or -1 when unreachable.
int intervening_relays(const EnergizedNetwork& net, const FaultLocation& fault, std::size_t relay);

struct FaultRecord {
  std::size_t scenario = 0;
  std::size_t relay = 0;
  std::vector<std::uint8_t> features;
  FaultClass psi = FaultClass::other;
  double i_f = 0.0;
  double v_f = 0.0;
  double zf_r = 0.0;
  double zf_x = 0.0;
  bool operator==(const FaultRecord&) const = default;
};

struct GenerationCounters {
  std::size_t scenarios = 0;
  std::size_t skipped = 0;
  std::size_t redraws = 0;
  std::vector<std::string> skip_reasons;
};

struct Dataset {
  std::vector<std::string> feature_names;
  std::vector<std::string> relay_ids;
  // Ordered by (scenario, relay).
  std::vector<FaultRecord> records;
  GenerationCounters counters;

  /// Records for one relay, in scenario order.
  std::vector<FaultRecord> for_relay(std::size_t relay) const;
  /// Per relay, class counts.
  std::vector<std::array<std::size_t, kFaultClassCount>> class_counts() const;
  bool operator==(const Dataset& o) const {
    return feature_names == o.feature_names && relay_ids == o.relay_ids && records == o.records;
  }
};

struct GenerationOptions {
  ShortCircuitOptions short_circuit;
  // 0 picks the hardware concurrency.
  unsigned workers = 0;
};

/// Scenario evaluation: topology applied, fault solved, one record per relay.
/// Deterministic under a fixed seed regardless of worker count.
Dataset generate_dataset(const NetworkModel& model, const DistributionSpec& spec,
                         const GenerationOptions& options = {});

/// Records of one evaluated scenario (exposed for tests and the runtime).
std::vector<FaultRecord> evaluate_scenario(const NetworkModel& model, const Scenario& scenario,
                                           const ShortCircuitOptions& options);

}  // namespace aprot
