#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "aprot/coordination.hpp"
#include "aprot/dataset_io.hpp"
#include "aprot/lda.hpp"
#include "aprot/model_io.hpp"
#include "aprot/modes.hpp"
#include "aprot/network.hpp"
#include "aprot/optimizer.hpp"
#include "aprot/runtime.hpp"
#include "aprot/scenario.hpp"
#include "aprot/settings_io.hpp"

namespace aprot {

enum ExitCode : int {
  kExitOk = 0,
  kExitRuntime = 1,
  kExitInput = 2,
  kExitPartial = 3,
  kExitCheckFailed = 4,
};

/// A group of relays whose settings are optimized together. `features`
/// empty with `auto_features` set means: derive from the member relays'
/// selections.
struct StudyConfig {
  std::string name;
  std::vector<std::string> relays;  // empty: every relay
  bool auto_features = true;
  std::vector<std::string> features;
  std::size_t max_features = 6;
};

struct PipelineConfig {
  // Resolved against the config file directory when relative.
  std::string network = "cigre_mv_benchmark.json";
  std::string dataset_dir = "out/dataset";
  std::string model_dir = "out/models";
  std::string settings_dir = "out/settings";
  std::string report_dir = "out/reports";
  std::uint64_t seed = 7;
  unsigned workers = 0;
  DistributionSpec distribution;
  ShortCircuitOptions short_circuit;
  SelectionRule selection;
  LdaOptions lda;
  ModeStatsOptions stats;
  std::size_t min_mode_samples = 1;
  OptimizerConfig optimizer;
  std::vector<StudyConfig> studies;
  // Studies loaded into the simulator.
  std::vector<std::string> runtime_studies;
  TimerMode timer = TimerMode::restart;
  TransportOptions transport;
  // Fresh scenarios drawn for the physical (unpinned) audit.
  std::size_t audit_samples = 200;
  // Curve export grid.
  double curve_i_min = 0.5;
  double curve_i_max = 30.0;
  std::size_t curve_i_points = 60;
  double curve_v_min = 0.8;
  double curve_v_max = 20.0;
  std::size_t curve_v_points = 40;

  /// Directory holding the config file; base of relative paths.
  std::string base_dir = ".";

  std::string resolve(const std::string& path) const;
  void validate() const;
};

std::string serialize_config(const PipelineConfig& c);
PipelineConfig parse_config(std::string_view text, const std::string& base_dir = ".");
PipelineConfig load_config(const std::string& path);

/// Command-line overrides shared by every subcommand.
struct CommandOptions {
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> n;
  std::optional<std::string> relay;
  std::optional<std::string> mode;
  std::optional<std::string> study;
  std::optional<std::vector<std::string>> suppress;
  std::optional<std::string> out;
};

/// Applies --seed, --n and --out to a config.
PipelineConfig with_overrides(PipelineConfig config, const CommandOptions& opts);

int cmd_gen(const PipelineConfig& config, const CommandOptions& opts, std::ostream& out);
int cmd_fit(const PipelineConfig& config, const CommandOptions& opts, std::ostream& out);
int cmd_optimize(const PipelineConfig& config, const CommandOptions& opts, std::ostream& out);
int cmd_simulate(const PipelineConfig& config, const CommandOptions& opts, std::ostream& out);
int cmd_curves(const PipelineConfig& config, const CommandOptions& opts, std::ostream& out);
int cmd_report(const PipelineConfig& config, const CommandOptions& opts, std::ostream& out);

/// Runs a command and maps library errors onto exit codes.
int run_command(const std::string& name, const PipelineConfig& config, const CommandOptions& opts, std::ostream& out,
                std::ostream& err);

// Building blocks shared with the tests.

std::string dataset_path(const PipelineConfig& c);
std::string model_path(const PipelineConfig& c, const std::string& relay);
std::string study_settings_dir(const PipelineConfig& c, const std::string& study);

/// Stage-1 and stage-2 fit of one relay.
RelayModel fit_relay(const Dataset& ds, std::size_t relay, const PipelineConfig& config);

/// Discrete features of a study: explicit, or the union of the member
/// relays' selections ranked by their normalized importance.
std::vector<std::string> study_features(const NetworkModel& model, const StudyConfig& study,
                                        const std::vector<RelayModel>& members);
std::vector<std::size_t> study_relays(const NetworkModel& model, const StudyConfig& study);

/// Distinct topologies of the dataset grouped by mode over `features`.
std::map<std::uint32_t, std::vector<TopologyState>> observed_topologies(const NetworkModel& model, const Dataset& ds,
                                                                        const std::vector<std::size_t>& features);

/// Coordination graph of one topology at nominal source parameters, bolted.
CoordinationGraph topology_graph(const NetworkModel& model, const TopologyState& t, const ShortCircuitOptions& sc);

struct StudyResult {
  StudySettings settings;
  std::vector<std::string> notes;
};

/// Optimizes every mode of a study.
StudyResult optimize_study(const NetworkModel& model, const Dataset& ds, const StudyConfig& study,
                           const std::vector<std::string>& features, const PipelineConfig& config,
                           const Provenance& provenance);

/// One simulated fault with the roles it is judged against.
struct SimulationJob {
  std::string name;
  TopologyState topology;
  FaultSpec fault;
  std::set<std::size_t> suppressed;
  std::map<std::size_t, CvarPoint> pinned;
  std::map<std::size_t, std::array<std::optional<CvarPoint>, 3>> class_points;
  bool parametrized = false;
  FaultContext context;
};

/// Runs jobs on worker threads, each with its own protection system;
/// results are in job order.
std::vector<TripLog> run_jobs(const NetworkModel& model, const std::vector<StudySettings>& studies,
                              const std::vector<SimulationJob>& jobs, const PipelineConfig& config);

/// Bus-8 scenario: PC1 and PC2 closed, S1-S3 open, DGs out, 1 ohm fault.
SimulationJob bus8_scenario(const NetworkModel& model, const std::vector<std::string>& suppress);

struct SweepRow {
  std::string study;
  std::string mode;
  std::string topology;
  std::string bus;
  std::string primary;
  std::string backup;
  std::string status;  // ok, failed, unconstrained
  double margin = 0.0;
  std::string detail;
};

struct SweepResult {
  std::vector<SimulationJob> jobs;
  std::vector<TripLog> logs;
  std::vector<SweepRow> rows;
  // Unsuppressed runs where a non-primary relay tripped.
  std::vector<std::string> unsuppressed_failures;
  // Unsuppressed runs at buses where some primary has no D_min row.
  std::vector<std::string> unsuppressed_unconstrained;
  std::size_t unsuppressed_runs = 0;
};

/// Suppression sweep over every (bus, primary, backup) triple of every
/// optimal mode, with measurements pinned at the CVaR points.
SweepResult suppression_sweep(const NetworkModel& model, const Dataset& ds, const std::vector<StudySettings>& studies,
                              const PipelineConfig& config);

struct PhysicalAudit {
  std::vector<SimulationJob> jobs;
  std::vector<TripLog> logs;
  std::size_t skipped = 0;
  std::size_t unisolated = 0;
  // Runs where a relay outside the fault's primaries tripped.
  std::size_t miscoordinated = 0;
};

/// Unsuppressed runs on scenarios drawn after the dataset's indices, with
/// every relay reading its physical measurement. Reported, not asserted.
PhysicalAudit physical_audit(const NetworkModel& model, const std::vector<StudySettings>& studies,
                             const PipelineConfig& config);

}  // namespace aprot
