#include "spinent/cli.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "spinent/analysis.hpp"
#include "spinent/entanglement.hpp"
#include "spinent/error.hpp"
#include "spinent/grid_io.hpp"
#include "spinent/linalg.hpp"
#include "spinent/model.hpp"
#include "spinent/version.hpp"

namespace spinent::cli {

namespace {

using json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Flags {
  std::optional<double> J, K, B, T;
  std::string output = "-";
  std::string format = "csv";
  std::optional<double> tol;
  std::optional<std::string> x, y;
  std::optional<std::string> figure;
  std::string method = "auto";
  unsigned threads = 0;
};

struct Recipe {
  std::string x, y;
  std::map<Param, double> fixed;
  std::vector<std::string> assumptions;
};

const std::string kFigure1Assumption = "figure 1 recipes use J=-0.4; the J value is not given with that figure";

Recipe figure_recipe(const std::string& name) {
  if (name == "1a") return {"B:0:1:101", "T:0.001:1:101", {{Param::J, -0.4}, {Param::K, -0.6}}, {kFigure1Assumption}};
  if (name == "1b") return {"B:0:1:101", "T:0.001:1:101", {{Param::J, -0.4}, {Param::K, -0.7}}, {kFigure1Assumption}};
  if (name == "2a") return {"K:-1:-0.2:81", "T:0.01:1:100", {{Param::J, -0.4}, {Param::B, 0.0}}, {}};
  if (name == "2b") return {"K:-1:-0.2:81", "T:0.01:1:100", {{Param::J, -0.4}, {Param::B, 0.5}}, {}};
  if (name == "3") return {"J:-1:-0.01:100", "K:-1.5:-0.015:100", {{Param::B, 0.8}, {Param::T, 0.2}}, {}};
  throw UsageError("unknown figure '" + name + "' (expected 1a, 1b, 2a, 2b or 3)");
}

double require(const std::optional<double>& v, const char* flag) {
  if (!v) throw UsageError(std::string("missing required flag --") + flag);
  if (!std::isfinite(*v)) throw UsageError(std::string("--") + flag + " must be finite");
  return *v;
}

double require_temperature(const std::optional<double>& v) {
  const double t = require(v, "T");
  if (!(t > 0.0)) throw UsageError("--T must be > 0");
  return t;
}

double optional_field(const std::optional<double>& v) {
  if (v && !std::isfinite(*v)) throw UsageError("--B must be finite");
  return v.value_or(0.0);
}

json tolerances_json(const Flags& f) {
  return json{{"hermitian_eig", kDefaultTol},
              {"negativity_clamp", kNegativityClampTol},
              {"zero_negativity", kZeroNegativity},
              {"bisection", f.tol.value_or(kBisectionTol)}};
}

json metadata(const std::string& command, const json& params, const Flags& f,
              const std::vector<std::string>& assumptions) {
  return json{{"command", command},
              {"version", kVersion},
              {"parameters", params},
              {"tolerances", tolerances_json(f)},
              {"assumptions", assumptions}};
}

std::string csv_preamble(const std::string& command) {
  return "# command: " + command + "\n# version: " + std::string(kVersion) + "\n";
}

// Each command validates its flags up front and returns a deferred
// computation producing the rendered output.
using Job = std::function<std::string()>;

Job plan_point(const Flags& f) {
  const ModelParams p{require(f.J, "J"), require(f.K, "K"), optional_field(f.B), require_temperature(f.T)};
  return [p, f] {
    const auto r = negativity(gibbs_state(p));
    if (f.format == "json") {
      const json params{{"J", p.J}, {"K", p.K}, {"B", p.B}, {"T", p.T}};
      return json{{"metadata", metadata("point", params, f, {})},
                  {"result", {{"negativity", r.negativity}, {"trace_norm", r.trace_norm},
                              {"negative_eigenvalues", r.negative_eigenvalues}}}}
                 .dump(2) + "\n";
    }
    return csv_preamble("point") + "J,K,B,T,negativity,trace_norm\n" + format_double(p.J) + "," +
           format_double(p.K) + "," + format_double(p.B) + "," + format_double(p.T) + "," +
           format_double(r.negativity) + "," + format_double(r.trace_norm) + "\n";
  };
}

Job plan_spectrum(const Flags& f) {
  const ModelParams p{require(f.J, "J"), require(f.K, "K"), optional_field(f.B), 0.0};
  return [p, f] {
    auto levels = analytic_spectrum(p).levels;
    std::stable_sort(levels.begin(), levels.end(),
                     [](const Level& a, const Level& b) { return a.energy < b.energy; });
    const auto numeric = hermitian_eigenvalues(build_hamiltonian(p));
    const auto ground = ground_state(p);

    if (f.format == "json") {
      json rows = json::array();
      for (std::size_t i = 0; i < levels.size(); ++i) {
        rows.push_back({{"label", levels[i].label},
                        {"analytic_energy", levels[i].energy},
                        {"numeric_eigenvalue", numeric[i]}});
      }
      const json params{{"J", p.J}, {"K", p.K}, {"B", p.B}};
      return json{{"metadata", metadata("spectrum", params, f, {})},
                  {"result", {{"levels", rows},
                              {"ground_state", {{"labels", ground.labels}, {"energy", ground.energy}}}}}}
                 .dump(2) + "\n";
    }
    std::ostringstream os;
    os << csv_preamble("spectrum");
    os << "# fixed: J=" << format_double(p.J) << ",K=" << format_double(p.K) << ",B=" << format_double(p.B) << "\n";
    os << "# ground_state: labels=";
    for (std::size_t i = 0; i < ground.labels.size(); ++i) os << (i ? ";" : "") << ground.labels[i];
    os << " energy=" << format_double(ground.energy) << "\n";
    os << "rank,label,analytic_energy,numeric_eigenvalue\n";
    for (std::size_t i = 0; i < levels.size(); ++i) {
      os << i + 1 << ',' << levels[i].label << ',' << format_double(levels[i].energy) << ','
         << format_double(numeric[i]) << '\n';
    }
    return os.str();
  };
}

Job plan_critical_field(const Flags& f) {
  const double J = require(f.J, "J");
  const double K = require(f.K, "K");
  return [J, K, f] {
    const double bc = critical_field(J, K);
    if (f.format == "json") {
      return json{{"metadata", metadata("critical-field", json{{"J", J}, {"K", K}}, f, {})},
                  {"result", {{"critical_field", bc}}}}
                 .dump(2) + "\n";
    }
    return csv_preamble("critical-field") + "J,K,critical_field\n" + format_double(J) + "," + format_double(K) +
           "," + format_double(bc) + "\n";
  };
}

Job plan_threshold(const Flags& f) {
  const double J = require(f.J, "J");
  const double K = require(f.K, "K");
  const double B = optional_field(f.B);
  const double tol = f.tol.value_or(kBisectionTol);
  if (!(tol > 0.0)) throw UsageError("--tol must be > 0");
  std::string method = f.method;
  if (method == "auto") method = B == 0.0 ? "analytic" : "numeric";
  if (method != "analytic" && method != "numeric") throw UsageError("--method must be auto, analytic or numeric");
  if (method == "analytic" && B != 0.0) throw UsageError("--method analytic requires --B 0");

  return [=] {
    const ThresholdResult r = method == "analytic" ? threshold_temperature_zero_field(J, K, tol)
                                                   : threshold_temperature_numeric(J, K, B, tol);
    if (f.format == "json") {
      const json params{{"J", J}, {"K", K}, {"B", B}, {"method", method}};
      return json{{"metadata", metadata("threshold", params, f, {})},
                  {"result", {{"threshold_temperature", r.value}, {"bracket", {r.lo, r.hi}},
                              {"iterations", r.iterations}, {"converged", r.converged}}}}
                 .dump(2) + "\n";
    }
    return csv_preamble("threshold") + "J,K,B,method,threshold_temperature,lo,hi,iterations,converged\n" +
           format_double(J) + "," + format_double(K) + "," + format_double(B) + "," + method + "," +
           format_double(r.value) + "," + format_double(r.lo) + "," + format_double(r.hi) + "," +
           std::to_string(r.iterations) + "," + (r.converged ? "true" : "false") + "\n";
  };
}

Job plan_sweep(const Flags& f) {
  Recipe recipe;
  if (f.figure) recipe = figure_recipe(*f.figure);
  if (f.x) recipe.x = *f.x;
  if (f.y) recipe.y = *f.y;
  if (recipe.x.empty() || recipe.y.empty()) throw UsageError("sweep needs --x and --y (or --figure)");

  GridSpec spec{parse_axis(recipe.x), parse_axis(recipe.y), {}, f.threads};
  const std::map<Param, std::optional<double>> given{
      {Param::J, f.J}, {Param::K, f.K}, {Param::B, f.B}, {Param::T, f.T}};
  for (Param p : {Param::J, Param::K, Param::B, Param::T}) {
    if (p == spec.x.param || p == spec.y.param) continue;
    std::optional<double> v = given.at(p);
    if (!v) {
      if (auto it = recipe.fixed.find(p); it != recipe.fixed.end()) v = it->second;
    }
    if (!v && p == Param::B) v = 0.0;
    set(spec.fixed, p, require(v, std::string(to_string(p)).c_str()));
  }
  validate(spec);

  return [spec, recipe, f] {
    const SweepGrid grid = sweep(spec);
    if (f.format == "json") {
      json doc = sweep_to_json(grid);
      json params{{"x", doc["x"]}, {"y", doc["y"]}, {"fixed", doc["fixed"]}};
      if (f.figure) params["figure"] = *f.figure;
      json out{{"metadata", metadata("sweep", params, f, recipe.assumptions)}};
      for (const char* key : {"x", "y", "fixed", "values"}) out[key] = std::move(doc[key]);
      return out.dump(2) + "\n";
    }
    std::vector<std::string> meta{"command: sweep", std::string("version: ") + kVersion};
    if (f.figure) meta.push_back("figure: " + *f.figure);
    for (const auto& a : recipe.assumptions) meta.push_back("assumption: " + a);
    std::ostringstream os;
    write_sweep_csv(os, grid, meta);
    return os.str();
  };
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Flags f;
  CLI::App app{"Thermal entanglement of a two-site spin-1 bilinear-biquadratic dimer", "spinent"};
  app.require_subcommand(1, 1);

  const auto common = [&f](CLI::App* sc) {
    sc->add_option("--output", f.output, "Output path, '-' for standard output");
    sc->add_option("--format", f.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sc->add_option("--tol", f.tol, "Bisection tolerance for threshold solvers");
  };
  const auto couplings = [&f](CLI::App* sc) {
    sc->add_option("--J", f.J, "Bilinear coupling");
    sc->add_option("--K", f.K, "Biquadratic coupling");
  };

  auto* point = app.add_subcommand("point", "Thermal negativity at one (J, K, B, T)");
  couplings(point);
  point->add_option("--B", f.B, "Magnetic field (default 0)");
  point->add_option("--T", f.T, "Temperature, > 0");
  common(point);

  auto* spectrum = app.add_subcommand("spectrum", "Closed-form and numeric spectrum");
  couplings(spectrum);
  spectrum->add_option("--B", f.B, "Magnetic field (default 0)");
  common(spectrum);

  auto* critical = app.add_subcommand("critical-field", "Level-crossing field 3/2 (J - K)");
  couplings(critical);
  common(critical);

  auto* threshold = app.add_subcommand("threshold", "Threshold temperature above which negativity vanishes");
  couplings(threshold);
  threshold->add_option("--B", f.B, "Magnetic field (default 0)");
  threshold->add_option("--method", f.method, "auto, analytic (B = 0 only) or numeric");
  common(threshold);

  auto* sweep_cmd = app.add_subcommand("sweep", "Negativity on a 2-D parameter grid");
  couplings(sweep_cmd);
  sweep_cmd->add_option("--B", f.B, "Magnetic field");
  sweep_cmd->add_option("--T", f.T, "Temperature");
  sweep_cmd->add_option("--x", f.x, "Axis NAME:min:max:count");
  sweep_cmd->add_option("--y", f.y, "Axis NAME:min:max:count");
  sweep_cmd->add_option("--figure", f.figure, "Preset grid: 1a, 1b, 2a, 2b or 3");
  sweep_cmd->add_option("--threads", f.threads, "Worker threads, 0 = all cores");
  common(sweep_cmd);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  Job job;
  try {
    if (point->parsed()) job = plan_point(f);
    else if (spectrum->parsed()) job = plan_spectrum(f);
    else if (critical->parsed()) job = plan_critical_field(f);
    else if (threshold->parsed()) job = plan_threshold(f);
    else job = plan_sweep(f);
  } catch (const std::exception& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  std::string rendered;
  try {
    rendered = job();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitComputation;
  }

  if (f.output == "-") {
    out << rendered;
    out.flush();
    return kExitOk;
  }
  std::ofstream file(f.output, std::ios::binary | std::ios::trunc);
  if (!file) {
    err << "usage error: cannot open output file '" << f.output << "'\n";
    return kExitUsage;
  }
  file << rendered;
  if (!file.flush()) {
    err << "error: failed writing '" << f.output << "'\n";
    return kExitComputation;
  }
  return kExitOk;
}

}  // namespace spinent::cli
