// Command-line front end: Berry-phase sweeps, Born-Oppenheimer surface
// export, convergence studies and the standalone 2 pi <n> oracle check.
//
// Exit codes: 0 success, 2 validation failure, 3 numerical guard trip.

#include "cavityberry/berry.hpp"
#include "cavityberry/cli_support.hpp"
#include "cavityberry/eigensolve.hpp"
#include "cavityberry/fock_algebra.hpp"
#include "cavityberry/hamiltonians.hpp"
#include "cavityberry/surfaces.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace cavityberry;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitGuard = 3;

enum class CliModel { jc, rabi, lambda };

CliModel parse_model(const std::string& name, bool allow_lambda) {
  if (name == "jc") return CliModel::jc;
  if (name == "rabi") return CliModel::rabi;
  if (name == "lambda" && allow_lambda) return CliModel::lambda;
  throw ValidationError("unknown model '" + name + "'");
}

struct BandFlag {
  bool jc_label = false;
  int n = 0;
  Branch branch = Branch::plus;
  int ordinal = 0;
  std::string text;
};

BandFlag parse_band(const std::string& text, CliModel model) {
  BandFlag band;
  band.text = text;
  if (text == "ground") {
    band.ordinal = 0;
    return band;
  }
  std::string digits = text;
  char suffix = '\0';
  if (!digits.empty() && (digits.back() == '+' || digits.back() == '-')) {
    suffix = digits.back();
    digits.pop_back();
  }
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
    throw ValidationError("band must be 'ground', an ordinal index, or '<n>+'/'<n>-'");
  const int value = int(parse_double_strict(digits));
  if (suffix == '\0') {
    band.ordinal = value;
    return band;
  }
  if (model != CliModel::jc)
    throw ValidationError("excitation-labelled bands ('" + text + "') apply to the jc model only");
  band.jc_label = true;
  band.n = value;
  band.branch = suffix == '+' ? Branch::plus : Branch::minus;
  return band;
}

struct CommonFlags {
  std::string model = "jc";
  double omega = 1.0;
  double nu = 1.0;
  double g = 0.1;
  std::optional<double> delta;
  int steps = 4096;
  int n_trunc = 60;
  int threads = 0;
  std::string band;
  std::string out;
  std::string format = "csv";
  std::string config;
};

void add_common_options(CLI::App* cmd, CommonFlags& flags, const std::string& default_out) {
  flags.out = default_out;
  cmd->add_option("--model", flags.model, "Model: jc or rabi")->capture_default_str();
  cmd->add_option("--omega", flags.omega, "Mode frequency")->capture_default_str();
  cmd->add_option("--nu", flags.nu, "Atomic transition frequency")->capture_default_str();
  cmd->add_option("--g", flags.g, "Coupling strength")->capture_default_str();
  cmd->add_option("--delta", flags.delta, "Detuning nu - omega (overrides --nu)");
  cmd->add_option("--steps", flags.steps, "Loop discretization steps K")->capture_default_str();
  cmd->add_option("--n-trunc", flags.n_trunc, "Retained Fock levels")->capture_default_str();
  cmd->add_option("--threads", flags.threads, "Worker threads (0 = auto)")->capture_default_str();
  cmd->add_option("--band", flags.band, "Tracked band: 'ground', ordinal, or '<n>+'/'<n>-'");
  cmd->add_option("--out", flags.out, "Output file")->capture_default_str();
  cmd->add_option("--format", flags.format, "Output format: csv or json")->capture_default_str();
  cmd->add_option("--config", flags.config, "Read defaults from a key=value file (flags win)");
}

// Applies "key = value" lines from a config file to every option the command
// line left unset; keys match the long option names without dashes.
void apply_config_file(CLI::App* cmd, const std::string& path) {
  std::ifstream file(path);
  if (!file) throw ValidationError("cannot read config file '" + path + "'");
  std::string line;
  const auto trim = [](std::string text) {
    const auto begin = text.find_first_not_of(" \t\r");
    const auto end = text.find_last_not_of(" \t\r");
    return begin == std::string::npos ? std::string{} : text.substr(begin, end - begin + 1);
  };
  int line_number = 0;
  while (std::getline(file, line)) {
    ++line_number;
    const std::string text = trim(line);
    if (text.empty() || text.front() == '#') continue;
    const size_t eq = text.find('=');
    if (eq == std::string::npos)
      throw ValidationError("config line " + std::to_string(line_number) + " is not key=value");
    const std::string key = trim(text.substr(0, eq));
    const std::string value = trim(text.substr(eq + 1));
    if (key == "config") throw ValidationError("config files cannot nest");
    CLI::Option* option = cmd->get_option_no_throw("--" + key);
    if (option == nullptr)
      throw ValidationError("unknown config key '" + key + "'");
    if (option->count() > 0) continue;  // explicit flags take precedence
    option->add_result(value);
    option->run_callback();
  }
}

NumericSettings settings_for(const CommonFlags& flags) {
  NumericSettings settings;
  settings.threads = flags.threads;
  return settings;
}

void validate_output_format(const std::string& format) {
  if (format != "csv" && format != "json")
    throw ValidationError("format must be 'csv' or 'json'");
}

JCParams jc_params_from(const CommonFlags& flags) {
  JCParams p{flags.omega, flags.nu, flags.g};
  if (flags.delta) p.nu = p.omega + *flags.delta;
  p.validate();
  return p;
}

RabiParams rabi_params_from(const CommonFlags& flags) {
  RabiParams p{flags.omega, flags.nu, flags.g};
  if (flags.delta) p.nu = p.omega + *flags.delta;
  p.validate();
  return p;
}

struct LoopResult {
  BerryPhaseResult wilson;
  double oracle = 0.0;
  std::optional<double> analytic;
};

LoopResult run_loop(CliModel model, const JCParams& jcp, const RabiParams& rp,
                    const BandFlag& band, int steps, int n_trunc,
                    const NumericSettings& settings) {
  const TruncationDim dim(n_trunc);
  const LoopSpec loop(steps);

  RotatedBuilder builder;
  BandSelector selector = BandSelector::ordinal(band.ordinal);
  if (model == CliModel::jc) {
    if (!(jcp.g > 0.0))
      throw ValidationError("jc loops need g > 0 (the dressed bands are degenerate at g = 0)");
    builder = [jcp, dim](double phi) { return build_jc_rotated(jcp, PhaseAngle(phi), dim); };
    if (band.jc_label) selector = jc_band(jcp, band.n, band.branch);
  } else {
    builder = [rp, dim](double phi) { return build_rabi_rotated(rp, PhaseAngle(phi), dim); };
  }

  const StateFamily family = eigenstate_family(builder, loop, selector, n_trunc, settings);
  LoopResult result;
  result.wilson = wilson_loop_phase(family, settings);
  result.oracle = number_expectation_phase(family.states.front());
  if (model == CliModel::jc && band.jc_label)
    result.analytic = jc_analytic_phase(jcp.delta(), jcp.g, band.n, band.branch);
  return result;
}

void write_table(const std::string& path, const std::string& format, const CsvRow& header,
                 const std::vector<CsvRow>& rows, const json& records) {
  if (format == "csv") {
    write_csv(path, header, rows);
  } else {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw Error("cannot open output file '" + path + "'");
    file << records.dump(2) << '\n';
  }
}

// ---------------------------------------------------------------- phase ---

int cmd_phase(const CommonFlags& flags, const std::string& sweep_spec) {
  validate_output_format(flags.format);
  const CliModel model = parse_model(flags.model, false);
  const BandFlag band =
      parse_band(flags.band.empty() ? (model == CliModel::jc ? "0+" : "ground") : flags.band,
                 model);
  const NumericSettings settings = settings_for(flags);

  SweepSpec sweep;
  if (!sweep_spec.empty()) {
    sweep = parse_sweep_spec(sweep_spec);
    if (sweep.key != "g" && sweep.key != "nu" && sweep.key != "omega" && sweep.key != "delta")
      throw ValidationError("sweep key must be one of g, nu, omega, delta");
    if (sweep.key == "delta" && model != CliModel::jc)
      throw ValidationError("delta sweeps apply to the jc model only");
  } else {
    sweep.key = "g";
    sweep.values = {flags.g};
  }

  const CsvRow header{"param",       "gamma_wilson", "gamma_analytic", "gamma_oracle_2pi_n",
                      "min_overlap", "K",            "n_trunc"};
  std::vector<CsvRow> rows;
  json records = json::array();

  for (const double value : sweep.values) {
    CommonFlags point = flags;
    if (sweep.key == "g") point.g = value;
    if (sweep.key == "nu") point.nu = value;
    if (sweep.key == "omega") point.omega = value;
    if (sweep.key == "delta") point.delta = value;

    const JCParams jcp = model == CliModel::jc ? jc_params_from(point) : JCParams{};
    const RabiParams rp = model == CliModel::rabi ? rabi_params_from(point) : RabiParams{};
    const LoopResult r = run_loop(model, jcp, rp, band, flags.steps, flags.n_trunc, settings);

    rows.push_back({fmt17(value), fmt17(r.wilson.gamma),
                    r.analytic ? fmt17(*r.analytic) : std::string{}, fmt17(r.oracle),
                    fmt17(r.wilson.min_overlap), std::to_string(r.wilson.steps),
                    std::to_string(r.wilson.n_trunc)});
    json record{{"param", value},
                {"gamma_wilson", r.wilson.gamma},
                {"gamma_analytic", nullptr},
                {"gamma_oracle_2pi_n", r.oracle},
                {"min_overlap", r.wilson.min_overlap},
                {"K", r.wilson.steps},
                {"n_trunc", r.wilson.n_trunc}};
    if (r.analytic) record["gamma_analytic"] = *r.analytic;
    records.push_back(std::move(record));
  }

  write_table(flags.out, flags.format, header, rows, records);
  std::cout << "phase: wrote " << rows.size() << " row(s) to " << flags.out << "\n";
  return kExitOk;
}

// -------------------------------------------------------------- surface ---

int cmd_surface(const CommonFlags& flags, const std::string& grid_spec,
                const std::string& pair_spec, double kappa, double chi, double delta3,
                std::optional<double> tol_flag) {
  validate_output_format(flags.format);
  const CliModel model = parse_model(flags.model, true);
  const Grid grid = parse_grid_spec(grid_spec);

  SurfaceGrid surface = [&] {
    switch (model) {
      case CliModel::jc: {
        const double delta = flags.delta ? *flags.delta : flags.nu - flags.omega;
        return jc_surfaces(delta, flags.g, grid);
      }
      case CliModel::rabi:
        return rabi_surfaces(flags.omega, flags.nu, flags.g, grid);
      case CliModel::lambda: {
        LambdaParams params;
        params.E1 = params.E2 = 0.0;
        params.E3 = delta3;
        params.kappa = kappa;
        params.g = flags.g;
        params.chi = chi;
        return lambda_surfaces(params, flags.omega, grid);
      }
    }
    throw ValidationError("unreachable");
  }();

  const size_t comma = pair_spec.find(',');
  if (comma == std::string::npos)
    throw ValidationError("pair must be 'sheet_a,sheet_b'");
  const std::string sheet_a = pair_spec.substr(0, comma);
  const std::string sheet_b = pair_spec.substr(comma + 1);

  double tol = tol_flag.value_or(0.0);
  if (!tol_flag) {
    double lo = surface.sheets.front().second.minCoeff();
    double hi = surface.sheets.front().second.maxCoeff();
    for (const auto& [name, values] : surface.sheets) {
      lo = std::min(lo, values.minCoeff());
      hi = std::max(hi, values.maxCoeff());
    }
    tol = 1e-9 * (hi - lo);
    if (!(tol > 0.0)) tol = 1e-12;
  }
  const DegeneracyReport report = detect_degeneracy(surface, sheet_a, sheet_b, tol);

  CsvRow header{"x", "p"};
  for (const auto& [name, values] : surface.sheets) header.push_back(name);
  std::vector<CsvRow> rows;
  json records = json::array();
  rows.reserve(size_t(grid.nx) * size_t(grid.np));
  for (int i = 0; i < grid.nx; ++i) {
    for (int j = 0; j < grid.np; ++j) {
      CsvRow row{fmt17(grid.x(i)), fmt17(grid.p(j))};
      json record{{"x", grid.x(i)}, {"p", grid.p(j)}};
      for (const auto& [name, values] : surface.sheets) {
        row.push_back(fmt17(values(i, j)));
        record[name] = values(i, j);
      }
      rows.push_back(std::move(row));
      records.push_back(std::move(record));
    }
  }
  write_table(flags.out, flags.format, header, rows, records);

  json sidecar{
      {"model", flags.model},
      {"pair", {sheet_a, sheet_b}},
      {"tol", tol},
      {"grid",
       {{"x_min", grid.x_min},
        {"x_max", grid.x_max},
        {"nx", grid.nx},
        {"p_min", grid.p_min},
        {"p_max", grid.p_max},
        {"np", grid.np}}},
      {"min_gap", report.min_gap},
      {"classification", to_string(report.classification)},
      {"gap_scaling_exponent", nullptr},
      {"argmin_nodes", json::array()},
  };
  if (std::isfinite(report.gap_scaling_exponent))
    sidecar["gap_scaling_exponent"] = report.gap_scaling_exponent;
  for (const auto& [i, j] : report.argmin_nodes)
    sidecar["argmin_nodes"].push_back({i, j});

  const std::string sidecar_path = flags.out + ".report.json";
  std::ofstream sidecar_file(sidecar_path, std::ios::binary);
  if (!sidecar_file) throw Error("cannot open output file '" + sidecar_path + "'");
  sidecar_file << sidecar.dump(2) << '\n';

  std::cout << "surface: wrote " << rows.size() << " nodes to " << flags.out
            << " (classification=" << to_string(report.classification) << ")\n";
  return kExitOk;
}

// -------------------------------------------------------------- converge ---

int cmd_converge(const CommonFlags& flags, const std::string& k_list_spec,
                 const std::string& n_list_spec) {
  validate_output_format(flags.format);
  const CliModel model = parse_model(flags.model, false);
  const BandFlag band =
      parse_band(flags.band.empty() ? (model == CliModel::jc ? "0+" : "ground") : flags.band,
                 model);
  const NumericSettings settings = settings_for(flags);

  std::vector<int> k_list = parse_int_list(k_list_spec);
  std::vector<int> n_list =
      n_list_spec.empty() ? std::vector<int>{flags.n_trunc} : parse_int_list(n_list_spec);
  std::sort(k_list.begin(), k_list.end());
  std::sort(n_list.begin(), n_list.end());

  const JCParams jcp = model == CliModel::jc ? jc_params_from(flags) : JCParams{};
  const RabiParams rp = model == CliModel::rabi ? rabi_params_from(flags) : RabiParams{};

  struct Row {
    int k, n;
    double gamma;
  };
  std::vector<Row> computed;
  for (const int n : n_list)
    for (const int k : k_list)
      computed.push_back({k, n, run_loop(model, jcp, rp, band, k, n, settings).wilson.gamma});

  const double finest = computed.back().gamma;  // max K, max N
  const CsvRow header{"K", "N", "gamma", "error_vs_finest"};
  std::vector<CsvRow> rows;
  json records = json::array();
  for (const Row& r : computed) {
    rows.push_back({std::to_string(r.k), std::to_string(r.n), fmt17(r.gamma),
                    fmt17(mod2pi_distance(r.gamma, finest))});
    records.push_back(json{{"K", r.k},
                           {"N", r.n},
                           {"gamma", r.gamma},
                           {"error_vs_finest", mod2pi_distance(r.gamma, finest)}});
  }
  write_table(flags.out, flags.format, header, rows, records);
  std::cout << "converge: wrote " << rows.size() << " row(s) to " << flags.out << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------- oracle ---

int cmd_oracle(const CommonFlags& flags) {
  validate_output_format(flags.format);
  const CliModel model = parse_model(flags.model, false);
  const BandFlag band =
      parse_band(flags.band.empty() ? (model == CliModel::jc ? "0+" : "ground") : flags.band,
                 model);
  const NumericSettings settings = settings_for(flags);
  const JCParams jcp = model == CliModel::jc ? jc_params_from(flags) : JCParams{};
  const RabiParams rp = model == CliModel::rabi ? rabi_params_from(flags) : RabiParams{};

  const LoopResult r = run_loop(model, jcp, rp, band, flags.steps, flags.n_trunc, settings);
  const double distance = mod2pi_distance(r.wilson.gamma, r.oracle);

  const CsvRow header{"model",       "band", "gamma_wilson", "gamma_oracle_2pi_n",
                      "mod2pi_distance", "min_overlap", "K", "n_trunc"};
  const std::vector<CsvRow> rows{{flags.model, band.text, fmt17(r.wilson.gamma),
                                  fmt17(r.oracle), fmt17(distance),
                                  fmt17(r.wilson.min_overlap), std::to_string(r.wilson.steps),
                                  std::to_string(r.wilson.n_trunc)}};
  const json records = json::array({json{{"model", flags.model},
                                         {"band", band.text},
                                         {"gamma_wilson", r.wilson.gamma},
                                         {"gamma_oracle_2pi_n", r.oracle},
                                         {"mod2pi_distance", distance},
                                         {"min_overlap", r.wilson.min_overlap},
                                         {"K", r.wilson.steps},
                                         {"n_trunc", r.wilson.n_trunc}}});
  write_table(flags.out, flags.format, header, rows, records);
  std::cout << "oracle: mod2pi_distance = " << fmt17(distance) << " (wilson "
            << fmt17(r.wilson.gamma) << ", 2pi<n> " << fmt17(r.oracle) << ")\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Berry phases and semiclassical energy surfaces of cavity-QED models"};
  app.require_subcommand(1);

  CommonFlags phase_flags;
  std::string sweep_spec;
  CLI::App* phase = app.add_subcommand("phase", "Wilson-loop Berry phase of one tracked band");
  add_common_options(phase, phase_flags, "phase.csv");
  phase->add_option("--sweep", sweep_spec, "Sweep 'key=lo:hi:count' over g, nu, omega or delta");

  CommonFlags surface_flags;
  std::string grid_spec = "-2:2:101,-2:2:101";
  std::string pair_spec = "E_minus,E_plus";
  double kappa = 1.0, chi = 0.0, delta3 = 0.0;
  std::optional<double> tol_flag;
  CLI::App* surface = app.add_subcommand("surface", "Born-Oppenheimer energy surfaces");
  add_common_options(surface, surface_flags, "surface.csv");
  surface->add_option("--grid", grid_spec, "Grid spec 'xmin:xmax:nx,pmin:pmax:np'")
      ->capture_default_str();
  surface->add_option("--pair", pair_spec, "Sheet pair for degeneracy detection")
      ->capture_default_str();
  surface->add_option("--kappa", kappa, "Classical drive coupling (lambda)")->capture_default_str();
  surface->add_option("--chi", chi, "Combined drive angle (lambda)")->capture_default_str();
  surface->add_option("--delta3", delta3, "Excited-state offset E3 - E1 (lambda)")
      ->capture_default_str();
  surface->add_option("--tol", tol_flag, "Degeneracy tolerance (default 1e-9 x spectral range)");

  CommonFlags converge_flags;
  std::string k_list = "256,512,1024,2048,4096";
  std::string n_list;
  CLI::App* converge = app.add_subcommand("converge", "Discretization/truncation convergence study");
  add_common_options(converge, converge_flags, "converge.csv");
  converge->add_option("--k-list", k_list, "Comma-separated loop step counts")
      ->capture_default_str();
  converge->add_option("--n-list", n_list, "Comma-separated Fock truncations");

  CommonFlags oracle_flags;
  CLI::App* oracle = app.add_subcommand("oracle", "Standalone Wilson-loop vs 2 pi <n> check");
  add_common_options(oracle, oracle_flags, "oracle.csv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  }

  try {
    if (phase->parsed()) {
      if (!phase_flags.config.empty()) apply_config_file(phase, phase_flags.config);
      return cmd_phase(phase_flags, sweep_spec);
    }
    if (surface->parsed()) {
      if (!surface_flags.config.empty()) apply_config_file(surface, surface_flags.config);
      return cmd_surface(surface_flags, grid_spec, pair_spec, kappa, chi, delta3, tol_flag);
    }
    if (converge->parsed()) {
      if (!converge_flags.config.empty()) apply_config_file(converge, converge_flags.config);
      return cmd_converge(converge_flags, k_list, n_list);
    }
    if (oracle->parsed()) {
      if (!oracle_flags.config.empty()) apply_config_file(oracle, oracle_flags.config);
      return cmd_oracle(oracle_flags);
    }
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const DegenerateParameters& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const Error& e) {
    std::cerr << "guard: " << e.what() << "\n";
    return kExitGuard;
  }
  return kExitOk;
}
