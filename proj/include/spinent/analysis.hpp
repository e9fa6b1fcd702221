#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "spinent/model.hpp"

namespace spinent {

// Negativity at or below this value counts as "not entangled" in every
// boundary search.
inline constexpr double kZeroNegativity = 1e-6;
inline constexpr double kBisectionTol = 1e-8;
inline constexpr int kMaxBisectionIterations = 200;

// Coarse temperature scan used before bisecting on the thermal negativity.
inline constexpr double kScanTmin = 1e-3;
inline constexpr double kScanTmax = 10.0;
inline constexpr int kScanPoints = 200;

struct ThresholdResult {
  double value;
  double lo;
  double hi;
  int iterations;
  bool converged;
};

// Field at which |-1,-1> crosses the singlet: 3/2 (J - K).
double critical_field(double J, double K);

// Largest K admitting zero-field thermal entanglement at temperature T:
// J - (T/3) ln((5 + 3 exp(2J/T)) / 2). Throws NonpositiveTemperature.
double existence_bound_K(double J, double T);

// Root in T of existence_bound_K(J, T) = K by bisection. The bracket starts at
// (1e-6, 10) and the upper end doubles up to 1e6. Throws NoRoot.
ThresholdResult threshold_temperature_zero_field(double J, double K, double tol = kBisectionTol);

// Largest temperature at which the thermal negativity drops to
// kZeroNegativity, for any field. Handles reentrant N(T) by bisecting above
// the hottest entangled scan point. Throws NeverEntangled or NoRoot.
ThresholdResult threshold_temperature_numeric(double J, double K, double B, double tol = kBisectionTol);

enum class Param { J, K, B, T };

// Point along one parameter where the thermal negativity crosses
// kZeroNegativity, bisected inside [lo, hi] with the other fields taken from
// `base`. Exactly one end of the interval must be entangled; throws NoRoot
// otherwise.
ThresholdResult negativity_boundary(const ModelParams& base, Param along, double lo, double hi,
                                    double tol = kBisectionTol);

std::string_view to_string(Param p) noexcept;
std::optional<Param> parse_param(std::string_view name) noexcept;
double get(const ModelParams& p, Param which) noexcept;
void set(ModelParams& p, Param which, double value) noexcept;

struct Axis {
  Param param;
  double min;
  double max;
  std::size_t count;

  // min + i (max - min) / (count - 1); the last point is exactly max.
  double value(std::size_t i) const noexcept;
};

struct GridSpec {
  Axis x;
  Axis y;
  ModelParams fixed;     // the two non-axis fields are read from here
  unsigned threads = 0;  // 0 = hardware concurrency
};

struct SweepGrid {
  Axis x;
  Axis y;
  ModelParams fixed;
  std::vector<double> values;  // x-major: values[ix * y.count + iy]

  double at(std::size_t ix, std::size_t iy) const noexcept { return values[ix * y.count + iy]; }
};

// Throws InvalidAxis or NonpositiveTemperature before evaluating anything.
void validate(const GridSpec& spec);

// Dense negativity grid. Output is independent of the thread count.
SweepGrid sweep(const GridSpec& spec);

}  // namespace spinent
