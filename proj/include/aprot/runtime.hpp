#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "aprot/network.hpp"
#include "aprot/optimizer.hpp"
#include "aprot/settings_io.hpp"
#include "aprot/short_circuit.hpp"

namespace aprot {

/// Local state of one relay: its study's setting groups and the active mode.
struct RelayAgent {
  std::size_t relay = 0;
  std::string id;
  int study = -1;                     // index into the loaded studies, -1 unprotected
  std::vector<std::size_t> features;  // subscribed model feature indices
  std::uint32_t mode = 0;
  const SettingGroup* group = nullptr;
  std::size_t messages = 0;  // acknowledged mode-switch messages
  std::vector<std::string> alarms;

  /// Setting of this relay in the active group, or nullptr when inert.
  const RelaySetting* setting() const;
};

struct MpmcMessage {
  std::size_t sequence = 0;
  std::size_t relay = 0;
  std::uint32_t mode = 0;
  int attempts = 0;
  bool acknowledged = false;
  std::string alarm;  // nonempty when the relay kept its old group
};

/// Lossy in-process transport; every lost attempt is retried.
struct TransportOptions {
  double loss_probability = 0.0;
  std::uint64_t seed = 0;
  int max_attempts = 8;
};

enum class TimerMode { restart, integrate };

struct SimulationOptions {
  TimerMode timer = TimerMode::restart;
  double tie_tolerance = 1e-12;
  std::size_t max_steps = 1000;
  ShortCircuitOptions short_circuit;
  // Fixed (I_F, V_F) for selected relays while they see forward current.
  std::map<std::size_t, CvarPoint> pinned;
  // CVaR-parametrized runs: after every solve each forward relay is
  // classified and reads the point of its class; relays without a point for
  // their current class (and all other-class relays) stay quiet.
  std::map<std::size_t, std::array<std::optional<CvarPoint>, 3>> class_points;
  bool parametrized = false;
};

struct FaultSpec {
  FaultLocation location;
  Complex zf;
  SourceParams params;
};

enum class TripEventKind { pickup, trip, blocked_reverse, no_pickup, reset, unisolated };
const char* to_string(TripEventKind k);
TripEventKind trip_event_from_string(std::string_view s);

struct TripEvent {
  double time = 0.0;
  std::string relay;  // "-" for the unisolated marker
  TripEventKind kind = TripEventKind::pickup;
  double scheduled = 0.0;  // trip time scheduled at pickup; 0 otherwise
  bool operator==(const TripEvent&) const = default;
};

struct TripLog {
  std::string fault;
  std::vector<std::string> suppressed;
  std::vector<TripEvent> events;
  bool isolated = false;

  std::vector<std::string> tripped() const;
  bool operator==(const TripLog&) const = default;
};

void write_trip_log(std::ostream& out, const TripLog& log);
std::string trip_log_text(const TripLog& log);
TripLog read_trip_log(std::istream& in);

/// Relays with their setting groups plus the MPMC that keeps them in the
/// right mode.
class ProtectionSystem {
 public:
  /// Relays of `studies` start in the mode of `initial`; a relay may belong
  /// to at most one study.
  ProtectionSystem(const NetworkModel& model, std::vector<StudySettings> studies, const TopologyState& initial,
                   TransportOptions transport = {});
  // Agents point into the owned studies.
  ProtectionSystem(const ProtectionSystem&) = delete;
  ProtectionSystem& operator=(const ProtectionSystem&) = delete;
  ProtectionSystem(ProtectionSystem&&) = default;

  const NetworkModel& model() const { return *model_; }
  const TopologyState& topology() const { return topology_; }
  const std::vector<RelayAgent>& agents() const { return agents_; }
  const std::vector<StudySettings>& studies() const { return studies_; }
  const std::vector<MpmcMessage>& message_log() const { return log_; }

  /// Sends one message to every relay whose subscribed features changed.
  std::vector<MpmcMessage> dispatch_topology_change(const TopologyState& next);

  /// Fault under the current topology.
  TripLog inject_fault(const FaultSpec& fault, const std::set<std::size_t>& suppressed,
                       const SimulationOptions& options = {}) const;

 private:
  void deliver(RelayAgent& agent, std::uint32_t mode, MpmcMessage& msg);

  const NetworkModel* model_;
  std::vector<StudySettings> studies_;
  TopologyState topology_;
  TransportOptions transport_;
  std::uint64_t rng_state_;
  std::vector<RelayAgent> agents_;
  std::vector<MpmcMessage> log_;
};

/// Expected roles for one simulated fault.
struct FaultContext {
  std::string name;
  std::set<std::size_t> primaries;
  std::map<std::size_t, std::set<std::size_t>> backups;  // primary -> backups
};

struct AuditVerdict {
  std::string name;
  bool isolated = false;
  bool primary_first = false;
  std::vector<std::string> tripped;
  // Margins of backups that acted for a suppressed primary.
  std::vector<std::pair<std::string, double>> backup_margins;
  std::vector<std::string> miscoordinations;
  bool ok() const { return isolated && primary_first && miscoordinations.empty(); }
};

struct AuditReport {
  std::vector<AuditVerdict> verdicts;
  std::size_t unisolated = 0;
  std::size_t miscoordinated = 0;
  double miscoordination_rate = 0.0;
};

AuditReport audit_coordination(const NetworkModel& model, const std::vector<TripLog>& logs,
                               const std::vector<FaultContext>& contexts, double mct);
std::string audit_report_json(const AuditReport& report);

}  // namespace aprot
