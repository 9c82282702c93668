#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "aprot/network.hpp"
#include "aprot/scenario.hpp"

namespace aprot {

inline constexpr int kDatasetSchema = 1;

/// CSV layout: a `#schema=1` line, a header
/// `scenario,relay,<features...>,psi,i_f_amps,v_f_pu,zf_r_ohm,zf_x_ohm`,
/// then one row per (scenario, relay). Doubles use shortest round-trip text.
void write_dataset(std::ostream& out, const Dataset& ds);
void write_dataset(const std::string& path, const Dataset& ds);

/// Relay ids and feature columns are resolved against `model`. Errors carry
/// the 1-based line number.
Dataset read_dataset(std::istream& in, const NetworkModel& model);
Dataset read_dataset(const std::string& path, const NetworkModel& model);

/// Shortest round-trip decimal text of a double.
std::string format_double(double x);
/// Strict parse of a full string as a double; nullopt on junk.
std::optional<double> parse_double(std::string_view s);

}  // namespace aprot
