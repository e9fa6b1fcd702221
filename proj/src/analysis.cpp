#include "spinent/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

#include "spinent/entanglement.hpp"
#include "spinent/error.hpp"

namespace spinent {

double critical_field(double J, double K) { return 1.5 * (J - K); }

double existence_bound_K(double J, double T) {
  if (!(T > 0.0)) throw Error(ErrorCode::NonpositiveTemperature, "T = " + std::to_string(T));
  const double x = 2.0 * J / T;
  // ln((5 + 3 e^x) / 2) without overflowing for large positive x
  const double log_term = x <= 0.0 ? std::log((5.0 + 3.0 * std::exp(x)) / 2.0)
                                   : x + std::log((5.0 * std::exp(-x) + 3.0) / 2.0);
  return J - T / 3.0 * log_term;
}

namespace {

// Bisection for a function positive at lo and non-positive at hi.
template <class F>
ThresholdResult bisect(F&& f, double lo, double hi, double tol) {
  ThresholdResult r{0.5 * (lo + hi), lo, hi, 0, false};
  while (r.iterations < kMaxBisectionIterations) {
    const double mid = 0.5 * (r.lo + r.hi);
    const double fm = f(mid);
    ++r.iterations;
    if (fm > 0.0) {
      r.lo = mid;
    } else {
      r.hi = mid;
    }
    r.value = 0.5 * (r.lo + r.hi);
    if (r.hi - r.lo <= tol && std::abs(f(r.value)) <= tol) {
      r.converged = true;
      break;
    }
  }
  return r;
}

}  // namespace

ThresholdResult threshold_temperature_zero_field(double J, double K, double tol) {
  const auto f = [&](double T) { return existence_bound_K(J, T) - K; };
  double lo = 1e-6;
  double hi = 10.0;
  if (!(f(lo) > 0.0)) {
    throw Error(ErrorCode::NoRoot, "K = " + std::to_string(K) + " is not below the low-temperature bound");
  }
  while (f(hi) > 0.0) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e6) throw Error(ErrorCode::NoRoot, "no sign change below T = 1e6");
  }
  return bisect(f, lo, hi, tol);
}

ThresholdResult threshold_temperature_numeric(double J, double K, double B, double tol) {
  const auto g = [&](double T) { return negativity_at({J, K, B, T}) - kZeroNegativity; };

  const double log_lo = std::log10(kScanTmin);
  const double log_hi = std::log10(kScanTmax);
  std::vector<double> temps(kScanPoints);
  for (int i = 0; i < kScanPoints; ++i) {
    temps[static_cast<std::size_t>(i)] = std::pow(10.0, log_lo + (log_hi - log_lo) * i / (kScanPoints - 1));
  }

  int hottest = -1;
  for (int i = 0; i < kScanPoints; ++i)
    if (g(temps[static_cast<std::size_t>(i)]) > 0.0) hottest = i;
  if (hottest < 0) {
    throw Error(ErrorCode::NeverEntangled,
                "negativity <= " + std::to_string(kZeroNegativity) + " over the whole scan");
  }

  double lo = temps[static_cast<std::size_t>(hottest)];
  double hi;
  if (hottest + 1 < kScanPoints) {
    hi = temps[static_cast<std::size_t>(hottest) + 1];
  } else {
    hi = kScanTmax;
    while (g(hi) > 0.0) {
      lo = hi;
      hi *= 2.0;
      if (hi > 1e4) throw Error(ErrorCode::NoRoot, "still entangled at T = 1e4");
    }
  }
  return bisect(g, lo, hi, tol);
}

ThresholdResult negativity_boundary(const ModelParams& base, Param along, double lo, double hi, double tol) {
  const auto g = [&](double v) {
    ModelParams p = base;
    set(p, along, v);
    return negativity_at(p) - kZeroNegativity;
  };
  const bool lo_entangled = g(lo) > 0.0;
  const bool hi_entangled = g(hi) > 0.0;
  if (lo_entangled == hi_entangled) {
    throw Error(ErrorCode::NoRoot, "negativity does not cross " + std::to_string(kZeroNegativity) + " on [" +
                                       std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  if (lo_entangled) return bisect(g, lo, hi, tol);

  // Mirror the axis so the entangled end comes first.
  ThresholdResult r = bisect([&](double u) { return g(-u); }, -hi, -lo, tol);
  return {-r.value, -r.hi, -r.lo, r.iterations, r.converged};
}

std::string_view to_string(Param p) noexcept {
  switch (p) {
    case Param::J: return "J";
    case Param::K: return "K";
    case Param::B: return "B";
    case Param::T: return "T";
  }
  return "?";
}

std::optional<Param> parse_param(std::string_view name) noexcept {
  if (name == "J") return Param::J;
  if (name == "K") return Param::K;
  if (name == "B") return Param::B;
  if (name == "T") return Param::T;
  return std::nullopt;
}

double get(const ModelParams& p, Param which) noexcept {
  switch (which) {
    case Param::J: return p.J;
    case Param::K: return p.K;
    case Param::B: return p.B;
    case Param::T: return p.T;
  }
  return 0.0;
}

void set(ModelParams& p, Param which, double value) noexcept {
  switch (which) {
    case Param::J: p.J = value; break;
    case Param::K: p.K = value; break;
    case Param::B: p.B = value; break;
    case Param::T: p.T = value; break;
  }
}

double Axis::value(std::size_t i) const noexcept {
  if (i + 1 == count) return max;
  return min + (max - min) * static_cast<double>(i) / static_cast<double>(count - 1);
}

void validate(const GridSpec& spec) {
  for (const Axis* a : {&spec.x, &spec.y}) {
    const std::string name(to_string(a->param));
    if (a->count < 2) throw Error(ErrorCode::InvalidAxis, name + " axis needs at least 2 points");
    if (!std::isfinite(a->min) || !std::isfinite(a->max) || !(a->min < a->max)) {
      throw Error(ErrorCode::InvalidAxis, name + " axis needs finite min < max");
    }
  }
  if (spec.x.param == spec.y.param) throw Error(ErrorCode::InvalidAxis, "x and y sweep the same parameter");

  for (Param p : {Param::J, Param::K, Param::B, Param::T}) {
    if (p == spec.x.param || p == spec.y.param) continue;
    if (!std::isfinite(get(spec.fixed, p))) {
      throw Error(ErrorCode::InvalidAxis, "fixed " + std::string(to_string(p)) + " is not finite");
    }
  }

  double lowest_t = spec.fixed.T;
  if (spec.x.param == Param::T) lowest_t = spec.x.min;
  if (spec.y.param == Param::T) lowest_t = spec.y.min;
  if (!(lowest_t > 0.0)) throw Error(ErrorCode::NonpositiveTemperature, "sweep reaches T <= 0");
}

SweepGrid sweep(const GridSpec& spec) {
  validate(spec);

  SweepGrid grid{spec.x, spec.y, spec.fixed, std::vector<double>(spec.x.count * spec.y.count)};

  const auto evaluate_column = [&](std::size_t ix) {
    ModelParams p = spec.fixed;
    set(p, spec.x.param, spec.x.value(ix));
    for (std::size_t iy = 0; iy < spec.y.count; ++iy) {
      set(p, spec.y.param, spec.y.value(iy));
      grid.values[ix * spec.y.count + iy] = negativity_at(p);
    }
  };

  unsigned threads = spec.threads != 0 ? spec.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, spec.x.count));

  if (threads <= 1) {
    for (std::size_t ix = 0; ix < spec.x.count; ++ix) evaluate_column(ix);
    return grid;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (std::size_t ix = next++; ix < spec.x.count; ix = next++) {
          try {
            evaluate_column(ix);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
  return grid;
}

}  // namespace spinent
