#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "aprot/network.hpp"
#include "aprot/short_circuit.hpp"

namespace aprot {

/// Primary relays per bus and backup relays per primary, built from bolted
/// bus faults.
struct CoordinationGraph {
  // Buses that were faulted (energized and faultable).
  std::vector<std::size_t> buses;
  // primaries[bus] = relays with zero intervening relays to the bus.
  std::vector<std::set<std::size_t>> primaries;
  // backups[relay] = backup relays of `relay` when it acts as a primary.
  std::vector<std::set<std::size_t>> backups;
  // Energized faultable buses without any primary relay.
  std::vector<std::size_t> unprotected;

  static CoordinationGraph empty(const NetworkModel& model);
  /// (bus, primary, backup) triples in ascending order.
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> triples() const;
  /// Union of two graphs over the same model.
  void merge(const CoordinationGraph& other);
  bool operator==(const CoordinationGraph&) const = default;
};

/// A relay b backs up primary p for a fault at B when b is classed backup for
/// that fault, looks into p's bus and sits on a different branch.
CoordinationGraph build_coordination_graph(const EnergizedNetwork& net, const SourceParams& params,
                                           const ShortCircuitOptions& options = {});

}  // namespace aprot
