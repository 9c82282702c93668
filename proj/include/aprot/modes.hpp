#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "aprot/lda.hpp"
#include "aprot/scenario.hpp"

namespace aprot {

/// Stage-1 design for one relay: topology features, then I_F and V_F.
LabeledData relay_training_data(const Dataset& ds, std::size_t relay);

/// Mode index of a feature vector: bit j holds feature `selected[j]`.
std::uint32_t mode_of(const std::vector<std::uint8_t>& features, const std::vector<std::size_t>& selected);
/// "S1=0,PC2=1" style label; "all" for the single mode of an empty set.
std::string mode_label(const std::vector<std::string>& names, std::uint32_t mode);
/// Bit string with character j = bit j, e.g. "01"; "-" for the empty set.
std::string mode_bits(std::uint32_t mode, std::size_t width);
std::optional<std::uint32_t> parse_mode_bits(std::string_view text, std::size_t width);

struct ModePartition {
  std::vector<std::size_t> features;  // discrete feature indices
  std::vector<std::string> names;
  std::vector<std::vector<std::size_t>> members;  // record indices per mode
  std::vector<bool> supported;
  std::size_t mode_count() const { return members.size(); }
};

/// 2^k modes over the selected discrete features. Modes holding fewer than
/// `min_samples` records are unsupported. Throws DomainError when k > cap.
ModePartition enumerate_modes(const std::vector<std::size_t>& features, const std::vector<std::string>& names,
                              const std::vector<FaultRecord>& records, std::size_t cap = 6,
                              std::size_t min_samples = 1);

struct ClassStats {
  bool present = false;
  std::size_t count = 0;
  Eigen::Vector2d mean = Eigen::Vector2d::Zero();  // (I_F amps, V_F pu)
  Eigen::Matrix2d cov = Eigen::Matrix2d::Zero();
  bool degenerate = false;  // a variance fell below the floor
};

struct ModeStats {
  std::uint32_t mode = 0;
  std::size_t count = 0;
  bool supported = false;
  std::array<ClassStats, kFaultClassCount> classes;
};

/// Per-mode, per-class Gaussian fits of one relay.
struct ModeStatistics {
  std::string relay;
  std::vector<std::string> features;
  std::vector<ModeStats> modes;
};

struct ModeStatsOptions {
  std::size_t min_class_samples = 3;
  // Relative variance floor; smaller variances are raised to it and flagged.
  double variance_floor = 1e-12;
};

ModeStatistics fit_mode_statistics(const ModePartition& partition, const std::vector<FaultRecord>& records,
                                   const std::string& relay_id, const ModeStatsOptions& options = {});

}  // namespace aprot
