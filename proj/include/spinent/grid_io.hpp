#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "spinent/analysis.hpp"

namespace spinent {

// Shortest decimal that parses back to the same double (at most 17
// significant digits).
std::string format_double(double v);

// Strict parse of a full token; throws std::invalid_argument.
double parse_double(const std::string& token);

// "NAME:min:max:count", e.g. "B:0:1:101". Throws InvalidAxis.
Axis parse_axis(const std::string& text);
std::string format_axis(const Axis& axis);

// Long-format CSV:
//   # fixed: J=-0.4,K=-0.6
//   # x: B:0:1:101
//   # y: T:0.001:1:101
//   # <extra metadata lines>
//   B,T,negativity
//   0,0.001,1
//   ...
// Rows are x-major. LF line endings.
void write_sweep_csv(std::ostream& out, const SweepGrid& grid, const std::vector<std::string>& metadata = {});

// Inverse of write_sweep_csv; unknown '#' lines are skipped. Throws
// std::runtime_error on malformed input.
SweepGrid read_sweep_csv(std::istream& in);

nlohmann::ordered_json sweep_to_json(const SweepGrid& grid);

}  // namespace spinent
