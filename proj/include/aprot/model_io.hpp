#pragma once

#include <string>
#include <vector>

#include "aprot/lda.hpp"
#include "aprot/modes.hpp"

namespace aprot {

inline constexpr int kModelVersion = 1;

/// Everything the fit stage learns about one relay.
struct RelayModel {
  std::string relay;
  // Nonempty when the classifier could not be fitted; stage-1 fields are
  // then empty and only the stage-2 statistics are meaningful.
  std::string stage1_error;
  LdaModel lda;
  FeatureImportance importance;
  ReducedFeatureSet selection;
  std::vector<PlateauRow> plateau;
  double accuracy_all = 0.0;
  double accuracy_selected = 0.0;
  ModeStatistics stage2;
};

std::string serialize_relay_model(const RelayModel& m);
RelayModel parse_relay_model(std::string_view text);
void write_relay_model(const std::string& path, const RelayModel& m);
RelayModel read_relay_model(const std::string& path);

/// 64-bit FNV-1a, lowercase hex.
std::string fnv1a_hex(std::string_view bytes);
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

}  // namespace aprot
