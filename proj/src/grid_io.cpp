#include "spinent/grid_io.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "spinent/error.hpp"

namespace spinent {

std::string format_double(double v) {
  if (v == 0.0) return "0";  // folds -0
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

double parse_double(const std::string& token) {
  double v = 0.0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (first != last && *first == '+') ++first;
  const auto res = std::from_chars(first, last, v);
  if (res.ec != std::errc{} || res.ptr != last) throw std::invalid_argument("not a number: '" + token + "'");
  return v;
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream ss(s);
  while (std::getline(ss, cur, sep)) parts.push_back(cur);
  if (!s.empty() && s.back() == sep) parts.emplace_back();
  return parts;
}

std::vector<Param> fixed_params(const SweepGrid& grid) {
  std::vector<Param> out;
  for (Param p : {Param::J, Param::K, Param::B, Param::T})
    if (p != grid.x.param && p != grid.y.param) out.push_back(p);
  return out;
}

}  // namespace

Axis parse_axis(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() != 4) throw Error(ErrorCode::InvalidAxis, "expected NAME:min:max:count, got '" + text + "'");
  const auto param = parse_param(parts[0]);
  if (!param) throw Error(ErrorCode::InvalidAxis, "unknown axis parameter '" + parts[0] + "'");
  try {
    const double min = parse_double(parts[1]);
    const double max = parse_double(parts[2]);
    std::size_t used = 0;
    const long count = std::stol(parts[3], &used);
    if (used != parts[3].size() || count < 0) throw std::invalid_argument("count");
    return {*param, min, max, static_cast<std::size_t>(count)};
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::InvalidAxis, "malformed axis '" + text + "'");
  }
}

std::string format_axis(const Axis& axis) {
  return std::string(to_string(axis.param)) + ":" + format_double(axis.min) + ":" + format_double(axis.max) +
         ":" + std::to_string(axis.count);
}

void write_sweep_csv(std::ostream& out, const SweepGrid& grid, const std::vector<std::string>& metadata) {
  out << "# fixed: ";
  const auto fixed = fixed_params(grid);
  for (std::size_t i = 0; i < fixed.size(); ++i) {
    if (i) out << ',';
    out << to_string(fixed[i]) << '=' << format_double(get(grid.fixed, fixed[i]));
  }
  out << '\n';
  out << "# x: " << format_axis(grid.x) << '\n';
  out << "# y: " << format_axis(grid.y) << '\n';
  for (const auto& line : metadata) out << "# " << line << '\n';
  out << to_string(grid.x.param) << ',' << to_string(grid.y.param) << ",negativity\n";
  for (std::size_t ix = 0; ix < grid.x.count; ++ix) {
    const std::string xs = format_double(grid.x.value(ix));
    for (std::size_t iy = 0; iy < grid.y.count; ++iy) {
      out << xs << ',' << format_double(grid.y.value(iy)) << ',' << format_double(grid.at(ix, iy)) << '\n';
    }
  }
}

SweepGrid read_sweep_csv(std::istream& in) {
  std::optional<Axis> x, y;
  ModelParams fixed;
  bool have_fixed = false;
  bool have_header = false;
  std::vector<double> values;

  std::string line;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line.rfind("# fixed: ", 0) == 0) {
      for (const auto& kv : split(line.substr(9), ',')) {
        const auto eq = kv.find('=');
        const auto p = eq == std::string::npos ? std::nullopt : parse_param(kv.substr(0, eq));
        if (!p) throw std::runtime_error("bad fixed entry '" + kv + "'");
        set(fixed, *p, parse_double(kv.substr(eq + 1)));
      }
      have_fixed = true;
    } else if (line.rfind("# x: ", 0) == 0) {
      x = parse_axis(line.substr(5));
    } else if (line.rfind("# y: ", 0) == 0) {
      y = parse_axis(line.substr(5));
    } else if (line[0] == '#') {
      continue;
    } else if (!have_header) {
      if (!x || !y || !have_fixed) throw std::runtime_error("data header before axis metadata");
      const std::string expected =
          std::string(to_string(x->param)) + "," + std::string(to_string(y->param)) + ",negativity";
      if (line != expected) throw std::runtime_error("unexpected column header '" + line + "'");
      have_header = true;
      values.reserve(x->count * y->count);
    } else {
      const auto cols = split(line, ',');
      if (cols.size() != 3) throw std::runtime_error("expected 3 columns: '" + line + "'");
      const std::size_t ix = row / y->count, iy = row % y->count;
      if (ix >= x->count) throw std::runtime_error("more rows than the axes declare");
      if (parse_double(cols[0]) != x->value(ix) || parse_double(cols[1]) != y->value(iy)) {
        throw std::runtime_error("row " + std::to_string(row) + " does not match the axis grid");
      }
      values.push_back(parse_double(cols[2]));
      ++row;
    }
  }
  if (!have_header) throw std::runtime_error("missing data header");
  if (values.size() != x->count * y->count) throw std::runtime_error("fewer rows than the axes declare");
  return {*x, *y, fixed, std::move(values)};
}

nlohmann::ordered_json sweep_to_json(const SweepGrid& grid) {
  using json = nlohmann::ordered_json;
  const auto axis_json = [](const Axis& a) {
    return json{{"name", std::string(to_string(a.param))}, {"min", a.min}, {"max", a.max}, {"count", a.count}};
  };
  json fixed = json::object();
  for (Param p : fixed_params(grid)) fixed[std::string(to_string(p))] = get(grid.fixed, p);

  json values = json::array();
  for (std::size_t ix = 0; ix < grid.x.count; ++ix) {
    json column = json::array();
    for (std::size_t iy = 0; iy < grid.y.count; ++iy) column.push_back(grid.at(ix, iy));
    values.push_back(std::move(column));
  }
  return json{{"x", axis_json(grid.x)}, {"y", axis_json(grid.y)}, {"fixed", fixed}, {"values", values}};
}

}  // namespace spinent
