#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "aprot/network.hpp"
#include "aprot/optimizer.hpp"
#include "aprot/scenario.hpp"

namespace aprot {

inline constexpr int kSettingsVersion = 1;

enum class ModeStatus { optimal, unprotectable, unsupported };
const char* to_string(ModeStatus s);
ModeStatus mode_status_from_string(std::string_view s);

struct RelaySetting {
  std::string relay;
  bool active = false;  // inactive relays never trip in this mode
  double zeta = 0.0;
  double i_s_amps = 0.0;
};

/// CVaR evaluation points of one relay per fault class in a mode, at the
/// constraint levels (primary and backup) and the objective level (other).
struct ClassPoints {
  std::string relay;
  std::array<std::optional<CvarPoint>, kFaultClassCount> points;
};

struct Provenance {
  std::string dataset_hash;
  std::string config_hash;
  std::string network_hash;
};

/// Settings of all relays of one study for one mode, with the problem they
/// were solved against so the certificate can be re-run from the file.
struct SettingGroup {
  std::string study;
  std::vector<std::string> features;
  std::uint32_t mode = 0;
  ModeStatus status = ModeStatus::unsupported;
  double eta_i = 0.0;
  double eta_v = 0.0;
  double v_s_pu = 0.9;
  std::vector<RelaySetting> relays;
  double objective = 0.0;
  std::vector<double> history;
  int iterations = 0;
  std::string stop_reason;
  // Limits used by the certificate.
  double d_min = 0.05;
  double mct = 0.15;
  double zeta_min = 0.0;
  double zeta_max = 100.0;
  std::vector<ObjectiveTerm> objective_terms;
  std::vector<CoordinationConstraint> constraints;
  std::vector<std::string> dropped;
  std::vector<ClassPoints> class_points;
  Certificate certificate;
  std::vector<std::string> infeasible_subset;
  std::vector<std::string> diagnostics;
  Provenance provenance;

  std::string bits() const;
  std::string label() const;
  const RelaySetting* find(std::string_view relay) const;
};

/// Rebuilds the optimization problem stored in a group.
ModeProblem stored_problem(const NetworkModel& model, const SettingGroup& g);
/// Re-runs the constraint certificate on a stored group.
Certificate recheck(const NetworkModel& model, const SettingGroup& g, double tolerance = 1e-6);

std::string serialize_setting_group(const NetworkModel& model, const SettingGroup& g);
SettingGroup parse_setting_group(const NetworkModel& model, std::string_view text);

/// "mode_01.json"; "mode_all.json" for a study without discrete features.
std::string setting_file_name(const SettingGroup& g);

/// One directory per study: study.json plus one file per mode.
struct StudySettings {
  std::string study;
  std::vector<std::string> relays;
  std::vector<std::string> features;
  std::vector<SettingGroup> groups;  // one per mode, ascending

  const SettingGroup* group(std::uint32_t mode) const;
};

void write_study_settings(const NetworkModel& model, const std::string& dir, const StudySettings& s);
StudySettings read_study_settings(const NetworkModel& model, const std::string& dir);

}  // namespace aprot
