// Command-line front end. One subcommand per run:
//   spectrum ground correlations susceptibility thermal sweep classical validate
// Flags can come from a flat key=value config file (--config); command-line
// flags override file values. Artifacts go to --out or stdout; a one-line
// summary goes to stderr. Exit codes: 0 success, 2 usage error, 3 numeric
// failure.

#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "emit.hpp"
#include "triq/analytic.hpp"
#include "triq/classical.hpp"
#include "triq/correlations.hpp"
#include "triq/error.hpp"
#include "triq/model.hpp"
#include "triq/sweep.hpp"
#include "triq/thermal.hpp"
#include "validate.hpp"

namespace {

using nlohmann::ordered_json;
using namespace triq;
using cli::format_label;
using cli::format_value;

struct Options {
  double j = 0.0, h = 1.0, eta = 1.0, omega = 1.0;
  std::string central = "B";
  double temperature = -1.0;  // < 0: not set
  std::vector<double> temperatures;
  std::string axis1, axis2;
  std::vector<std::string> quantities;
  std::string format;  // empty: per-command default
  std::string out;
  std::string path_pref = "analytic-first";
  double fd_step = 0.0;
  double tmax = 1.5;
  int points = 50;
  int resolution = 96;
  std::string grid = "default";
  std::string svg_kind;  // empty: by axis count
};

CouplingConfig model_config(const Options& o) { return {o.j, o.h, o.eta, o.omega}; }

bool numeric_only(const Options& o) { return o.path_pref == "numeric-only"; }

char central_char(const Options& o) { return o.central[0]; }

SweepAxis parse_axis(const std::string& s) {
  SweepAxis ax;
  size_t p0 = s.find(':');
  size_t p1 = p0 == std::string::npos ? p0 : s.find(':', p0 + 1);
  size_t p2 = p1 == std::string::npos ? p1 : s.find(':', p1 + 1);
  if (p2 == std::string::npos || s.find(':', p2 + 1) != std::string::npos)
    fail(errc::usage, "axis must be name:min:max:count, got '" + s + "'");
  ax.name = s.substr(0, p0);
  try {
    size_t used = 0;
    const std::string smin = s.substr(p0 + 1, p1 - p0 - 1);
    ax.min = std::stod(smin, &used);
    if (used != smin.size()) throw std::invalid_argument(smin);
    const std::string smax = s.substr(p1 + 1, p2 - p1 - 1);
    ax.max = std::stod(smax, &used);
    if (used != smax.size()) throw std::invalid_argument(smax);
    const std::string scount = s.substr(p2 + 1);
    ax.count = std::stoi(scount, &used);
    if (used != scount.size()) throw std::invalid_argument(scount);
  } catch (const std::exception&) {
    fail(errc::usage, "axis must be name:min:max:count, got '" + s + "'");
  }
  return ax;
}

// The effective configuration, echoed into every artifact.
ordered_json config_echo(const std::string& command, const Options& o) {
  ordered_json c;
  c["command"] = command;
  c["j"] = o.j;
  c["h"] = o.h;
  c["eta"] = o.eta;
  c["omega"] = o.omega;
  c["central"] = o.central;
  c["path"] = o.path_pref;
  if (o.fd_step > 0.0) c["fd_step"] = o.fd_step;
  if (o.temperature >= 0.0) c["temperature"] = o.temperature;
  if (!o.temperatures.empty()) c["temperatures"] = o.temperatures;
  if (!o.axis1.empty()) c["axis1"] = o.axis1;
  if (!o.axis2.empty()) c["axis2"] = o.axis2;
  if (!o.quantities.empty()) c["quantities"] = o.quantities;
  return c;
}

std::string echo_string(const ordered_json& c) {
  std::string s;
  for (const auto& [k, v] : c.items()) {
    if (!s.empty()) s += ' ';
    s += k + "=" + (v.is_string() ? v.get<std::string>() : v.dump());
  }
  return s;
}

void write_artifact(const std::string& content, const std::string& out_path) {
  if (out_path.empty()) {
    std::fwrite(content.data(), 1, content.size(), stdout);
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) fail(errc::io, "cannot open '" + out_path + "' for writing");
  f.write(content.data(), static_cast<std::streamsize>(content.size()));
  f.flush();
  if (!f) fail(errc::io, "write failed for '" + out_path + "'");
}

void summary_line(const std::string& text, const std::string& out_path) {
  std::cerr << text;
  if (!out_path.empty()) std::cerr << " -> " << out_path;
  std::cerr << "\n";
}

// A small single-row table for the scalar commands' CSV format.
std::string csv_table(const std::vector<std::string>& header,
                      const std::vector<std::vector<std::string>>& rows) {
  std::string out;
  for (size_t c = 0; c < header.size(); ++c) {
    if (c) out += ',';
    out += header[c];
  }
  out += '\n';
  for (const auto& row : rows) {
    for (size_t c = 0; c < row.size(); ++c) {
      if (c) out += ',';
      out += row[c];
    }
    out += '\n';
  }
  return out;
}

std::string pick_format(const Options& o, const std::string& fallback,
                        std::initializer_list<const char*> allowed) {
  const std::string f = o.format.empty() ? fallback : o.format;
  for (const char* a : allowed)
    if (f == a) return f;
  fail(errc::usage, "format '" + f + "' not supported by this command");
}

int run_spectrum(const Options& o) {
  const CouplingConfig cfg = model_config(o);
  cfg.validate();
  const Spectrum s = eigendecompose(build_hamiltonian(cfg));
  std::array<double, 8> energies = s.energies;
  std::string path = "numeric";
  if (!numeric_only(o) && cfg.h == 1.0 && cfg.omega == 1.0) {
    try {
      energies = analytic_spectrum_one_param(cfg.j, cfg.eta);
      std::sort(energies.begin(), energies.end());
      path = "analytic";
    } catch (const Error&) {
      energies = s.energies;
    }
  }
  const std::string fmt = pick_format(o, "json", {"json", "csv"});
  if (fmt == "json") {
    ordered_json doc;
    doc["config"] = config_echo("spectrum", o);
    doc["energies"] = energies;
    doc["gap"] = energies[1] - energies[0];
    doc["path"] = path;
    write_artifact(doc.dump(2) + "\n", o.out);
  } else {
    std::vector<std::vector<std::string>> rows;
    for (int i = 0; i < 8; ++i)
      rows.push_back({std::to_string(i), format_value(energies[i]), path});
    write_artifact(csv_table({"index", "energy", "path"}, rows), o.out);
  }
  summary_line("spectrum: E0=" + format_label(energies[0]) +
                   " gap=" + format_label(energies[1] - energies[0]) + " path=" + path,
               o.out);
  return 0;
}

int run_ground(const Options& o) {
  const CouplingConfig cfg = model_config(o);
  cfg.validate();
  const Spectrum s = eigendecompose(build_hamiltonian(cfg));
  const GroundState numeric = ground_state(s);
  std::array<double, 8> amps = numeric.amplitudes;
  double energy = s.energies[0];
  std::string path = "numeric";
  if (!numeric_only(o) && cfg.h == 1.0) {
    try {
      if (cfg.omega == 1.0) {
        const AnalyticGroundStateA g = analytic_ground_state_one_param(cfg.j, cfg.eta);
        amps = g.state();
        energy = g.e0;
        path = "analytic";
      } else if (cfg.omega == 0.8 || cfg.omega == 1.2) {
        const AnalyticGroundStateB g = analytic_ground_two_param(cfg.j, cfg.eta, cfg.omega);
        amps = g.state();
        energy = g.e0;
        path = "analytic";
      }
    } catch (const Error&) {
      amps = numeric.amplitudes;
      energy = s.energies[0];
      path = "numeric";
    }
  }
  // Same gauge as the numeric path: first nonzero amplitude positive.
  for (double a : amps) {
    if (std::abs(a) > 1e-12) {
      if (a < 0.0)
        for (double& x : amps) x = -x;
      break;
    }
  }
  const std::string fmt = pick_format(o, "json", {"json", "csv"});
  if (fmt == "json") {
    ordered_json doc;
    doc["config"] = config_echo("ground", o);
    doc["energy"] = energy;
    doc["amplitudes"] = amps;
    doc["degenerate"] = numeric.degenerate;
    doc["gap"] = s.gap;
    doc["path"] = path;
    write_artifact(doc.dump(2) + "\n", o.out);
  } else {
    std::vector<std::vector<std::string>> rows;
    for (int i = 0; i < 8; ++i) {
      const std::string ket = {char('0' + ((i >> 2) & 1)), char('0' + ((i >> 1) & 1)),
                               char('0' + (i & 1))};
      rows.push_back({std::to_string(i), ket, format_value(amps[i]), path});
    }
    write_artifact(csv_table({"index", "ket", "amplitude", "path"}, rows), o.out);
  }
  summary_line("ground: E0=" + format_label(energy) + " path=" + path, o.out);
  return 0;
}

int run_correlations(const Options& o) {
  const CouplingConfig cfg = model_config(o);
  const CorrelationReport rep =
      correlation_report(cfg, central_char(o), o.fd_step, numeric_only(o));
  const double t3_central = o.central == "A"   ? rep.t3_central_a
                            : o.central == "B" ? rep.t3_central_b
                                               : rep.t3_central_c;
  const Regime regime = classify_regime(t3_central, rep.chi_t3);
  const std::string fmt = pick_format(o, "json", {"json", "csv"});
  if (fmt == "json") {
    ordered_json doc;
    doc["config"] = config_echo("correlations", o);
    doc["n_a_bc"] = rep.n_a_bc;
    doc["n_b_ac"] = rep.n_b_ac;
    doc["n_c_ab"] = rep.n_c_ab;
    doc["n_ab"] = rep.n_ab;
    doc["n_ac"] = rep.n_ac;
    doc["n_bc"] = rep.n_bc;
    doc["t3_central_a"] = rep.t3_central_a;
    doc["t3_central_b"] = rep.t3_central_b;
    doc["t3_central_c"] = rep.t3_central_c;
    doc["chi_t3"] = rep.chi_t3;
    doc["chi_m"] = rep.chi_m;
    doc["regime"] = regime_name(regime);
    doc["path"] = rep.path;
    doc["flags"] = rep.flags;
    write_artifact(doc.dump(2) + "\n", o.out);
  } else {
    std::string flags;
    for (const auto& f : rep.flags) flags += (flags.empty() ? "" : ";") + f;
    write_artifact(
        csv_table({"n_a_bc", "n_b_ac", "n_c_ab", "n_ab", "n_ac", "n_bc",
                   "t3_central_a", "t3_central_b", "t3_central_c", "chi_t3",
                   "chi_m", "regime", "path", "flags"},
                  {{format_value(rep.n_a_bc), format_value(rep.n_b_ac),
                    format_value(rep.n_c_ab), format_value(rep.n_ab),
                    format_value(rep.n_ac), format_value(rep.n_bc),
                    format_value(rep.t3_central_a), format_value(rep.t3_central_b),
                    format_value(rep.t3_central_c), format_value(rep.chi_t3),
                    format_value(rep.chi_m), regime_name(regime), rep.path, flags}}),
        o.out);
  }
  summary_line("correlations: t3_" + o.central + "=" + format_label(t3_central) +
                   " chi_t3=" + format_label(rep.chi_t3) + " regime=" +
                   regime_name(regime) + " path=" + rep.path,
               o.out);
  return 0;
}

int run_susceptibility(const Options& o) {
  const CouplingConfig cfg = model_config(o);
  cfg.validate();
  const double step = o.fd_step > 0.0 ? o.fd_step : default_fd_step(cfg.j);
  const FdValue chi = mqc_susceptibility(cfg, central_char(o), step, numeric_only(o));
  const FdValue chim = magnetic_susceptibility(cfg, step, numeric_only(o));
  bool used_numeric = true;
  const double t3_central = ground_t3(cfg, central_char(o), numeric_only(o), &used_numeric);
  const Regime regime = classify_regime(t3_central, chi.value);
  const std::string path = used_numeric ? "numeric" : "analytic";
  const std::string fmt = pick_format(o, "json", {"json", "csv"});
  if (fmt == "json") {
    ordered_json doc;
    doc["config"] = config_echo("susceptibility", o);
    doc["fd_step"] = step;
    doc["chi_t3"] = chi.value;
    doc["chi_m"] = chim.value;
    doc["t3"] = t3_central;
    doc["one_sided"] = chi.one_sided || chim.one_sided;
    doc["regime"] = regime_name(regime);
    doc["path"] = path;
    write_artifact(doc.dump(2) + "\n", o.out);
  } else {
    write_artifact(
        csv_table({"fd_step", "chi_t3", "chi_m", "t3", "one_sided", "regime", "path"},
                  {{format_value(step), format_value(chi.value),
                    format_value(chim.value), format_value(t3_central),
                    chi.one_sided || chim.one_sided ? "true" : "false",
                    regime_name(regime), path}}),
        o.out);
  }
  summary_line("susceptibility: chi_t3=" + format_label(chi.value) +
                   " chi_m=" + format_label(chim.value) + " regime=" +
                   regime_name(regime) + " path=" + path,
               o.out);
  return 0;
}

int run_thermal(const Options& o) {
  const CouplingConfig cfg = model_config(o);
  cfg.validate();
  if (o.temperature >= 0.0) {
    const double t3_t = thermal_t3(cfg, o.temperature, central_char(o));
    const std::string fmt = pick_format(o, "json", {"json", "csv"});
    ordered_json doc;
    doc["config"] = config_echo("thermal", o);
    doc["temperature"] = o.temperature;
    doc["thermal_t3"] = t3_t;
    if (o.temperature > 0.0)
      doc["delta"] = robustness_delta(cfg, o.temperature, central_char(o));
    doc["path"] = "numeric";
    if (fmt == "json") {
      write_artifact(doc.dump(2) + "\n", o.out);
    } else {
      std::vector<std::string> hdr = {"T", "thermal_t3", "path"};
      std::vector<std::string> row = {format_value(o.temperature), format_value(t3_t),
                                      "numeric"};
      if (doc.contains("delta")) {
        hdr.insert(hdr.begin() + 2, "delta");
        row.insert(row.begin() + 2, format_value(doc["delta"].get<double>()));
      }
      write_artifact(csv_table(hdr, {row}), o.out);
    }
    summary_line("thermal: T=" + format_label(o.temperature) +
                     " t3=" + format_label(t3_t) + " path=numeric",
                 o.out);
    return 0;
  }

  // Temperature curve on the low-T-resolving grid.
  const std::vector<double> grid = temperature_grid(o.tmax, o.points);
  const Spectrum s = eigendecompose(build_hamiltonian(cfg));
  SweepResult result;
  result.axes.push_back({"T", grid.front(), grid.back(), static_cast<int>(grid.size())});
  result.columns = {"T", "thermal_t3", "path"};
  for (double t : grid) {
    SweepRow row;
    row.coords = {t};
    row.values = {t3(gibbs_state(s, t).rho, central_char(o))};
    row.path = "numeric";
    result.rows.push_back(std::move(row));
  }
  const std::string fmt = pick_format(o, "csv", {"csv", "json", "svg"});
  const ordered_json echo = config_echo("thermal", o);
  if (fmt == "csv")
    write_artifact(cli::csv_from_sweep(result), o.out);
  else if (fmt == "json")
    write_artifact(cli::json_from_sweep(result, echo), o.out);
  else
    write_artifact(cli::svg_from_sweep(result, cli::SvgKind::lines, echo_string(echo)),
                   o.out);
  summary_line("thermal: " + std::to_string(grid.size()) + " temperatures in [" +
                   format_label(grid.front()) + ", " + format_label(grid.back()) +
                   "] t3(0)=" + format_label(t3(gibbs_state(s, 0.0).rho, central_char(o))),
               o.out);
  return 0;
}

int run_sweep_cmd(const Options& o) {
  if (o.axis1.empty()) fail(errc::usage, "sweep needs --axis1 name:min:max:count");
  SweepSpec spec;
  spec.axis1 = parse_axis(o.axis1);
  if (!o.axis2.empty()) spec.axis2 = parse_axis(o.axis2);
  spec.fixed = model_config(o);
  spec.quantities = o.quantities.empty() ? std::vector<std::string>{"t3"} : o.quantities;
  spec.temperature_list = o.temperatures;
  if (spec.temperature_list.empty() && o.temperature >= 0.0)
    spec.temperature_list.push_back(o.temperature);
  spec.central = central_char(o);
  spec.fd_step = o.fd_step;
  spec.numeric_only = numeric_only(o);

  const SweepResult result = run_sweep(spec);
  const std::string fmt = pick_format(o, "csv", {"csv", "json", "svg"});
  const ordered_json echo = config_echo("sweep", o);
  if (fmt == "csv") {
    write_artifact(cli::csv_from_sweep(result), o.out);
  } else if (fmt == "json") {
    write_artifact(cli::json_from_sweep(result, echo), o.out);
  } else {
    cli::SvgKind kind = result.axes.size() == 2 ? cli::SvgKind::heatmap
                                                : cli::SvgKind::lines;
    if (o.svg_kind == "heatmap") kind = cli::SvgKind::heatmap;
    if (o.svg_kind == "lines") kind = cli::SvgKind::lines;
    write_artifact(cli::svg_from_sweep(result, kind, echo_string(echo)), o.out);
  }
  size_t failed = 0;
  for (const auto& row : result.rows) failed += row.error.empty() ? 0 : 1;
  summary_line("sweep: " + std::to_string(result.rows.size()) + " points, " +
                   std::to_string(failed) + " failed",
               o.out);
  return 0;
}

int run_classical(const Options& o) {
  // Bond couplings from the quantum parameters: (J_AB, J_BC, J_CA) =
  // (j, j*omega, j*eta).
  const std::array<double, 3> couplings = {o.j, o.j * o.omega, o.j * o.eta};
  const ClassicalGround g = classical_ground_search(couplings, o.resolution);
  const std::string fmt = pick_format(o, "json", {"json", "csv"});
  if (fmt == "json") {
    ordered_json doc;
    doc["config"] = config_echo("classical", o);
    doc["couplings"] = {{"j_ab", couplings[0]}, {"j_bc", couplings[1]},
                        {"j_ca", couplings[2]}};
    doc["thetas"] = g.thetas;
    doc["energy"] = g.energy;
    doc["resolution"] = o.resolution;
    doc["path"] = "numeric";
    write_artifact(doc.dump(2) + "\n", o.out);
  } else {
    write_artifact(csv_table({"j_ab", "j_bc", "j_ca", "theta_a", "theta_b", "theta_c",
                              "energy", "path"},
                             {{format_value(couplings[0]), format_value(couplings[1]),
                               format_value(couplings[2]), format_value(g.thetas[0]),
                               format_value(g.thetas[1]), format_value(g.thetas[2]),
                               format_value(g.energy), "numeric"}}),
                   o.out);
  }
  summary_line("classical: E=" + format_label(g.energy) + " thetas=(" +
                   format_label(g.thetas[0]) + ", " + format_label(g.thetas[1]) +
                   ", " + format_label(g.thetas[2]) + ")",
               o.out);
  return 0;
}

int run_validate_cmd(const Options& o) {
  if (o.grid != "default")
    fail(errc::usage, "only --grid default is available, got '" + o.grid + "'");
  const cli::ValidateReport rep = cli::run_validate();
  const std::string fmt = pick_format(o, "text", {"text", "json"});
  if (fmt == "json") {
    ordered_json doc;
    doc["config"] = config_echo("validate", o);
    doc["a_energy_dev"] = rep.a_energy_dev;
    doc["a_measure_dev"] = rep.a_measure_dev;
    doc["b_energy_dev"] = {rep.b_energy_dev[0], rep.b_energy_dev[1]};
    doc["b_measure_dev"] = {rep.b_measure_dev[0], rep.b_measure_dev[1]};
    doc["b_literal_dev"] = {rep.b_literal_dev[0], rep.b_literal_dev[1]};
    doc["eq_nab_dev"] = rep.eq_nab_dev;
    doc["eq_t3_k2_dev"] = rep.eq_t3_k2_dev;
    doc["eq_t3_k4_dev"] = rep.eq_t3_k4_dev;
    doc["gated_dev"] = rep.gated_dev;
    doc["crossing"] = rep.crossing;
    doc["fallback_points"] = rep.fallback_points;
    doc["pass"] = rep.pass;
    write_artifact(doc.dump(2) + "\n", o.out);
  } else {
    write_artifact(cli::validate_text(rep), o.out);
  }
  summary_line(std::string("validate: ") + (rep.pass ? "PASS" : "FAIL") +
                   " max_dev=" + format_label(rep.gated_dev),
               o.out);
  return rep.pass ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{
      "triq: ground-state and thermal multipartite correlations of three Ising "
      "spins on an anisotropic triangle in a transverse field"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "flat key=value config file (flags override)");
  // --h is the transverse field, so the help flag keeps only its long form.
  app.set_help_flag("--help", "print this help message and exit");

  app.add_option("--j", opt.j, "coupling strength J");
  app.add_option("--h", opt.h, "transverse field (default 1)");
  app.add_option("--eta", opt.eta, "C-A bond anisotropy (default 1)");
  app.add_option("--omega", opt.omega, "B-C bond anisotropy (default 1)");
  app.add_option("--central", opt.central, "central qubit for T3 (default B)")
      ->check(CLI::IsMember({"A", "B", "C"}));
  app.add_option("--temperature", opt.temperature, "temperature (k_B = 1)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--temperatures", opt.temperatures,
                 "comma-separated temperature list for sweep columns")
      ->delimiter(',');
  app.add_option("--axis1", opt.axis1, "sweep axis, name:min:max:count");
  app.add_option("--axis2", opt.axis2, "second sweep axis, name:min:max:count");
  app.add_option("--quantity", opt.quantities,
                 "sweep quantities: n_ab t3 chi_t3 chi_m thermal_t3 delta "
                 "(default t3)")
      ->delimiter(',');
  app.add_option("--format", opt.format, "output format (csv|json|svg|text)")
      ->check(CLI::IsMember({"csv", "json", "svg", "text"}));
  app.add_option("--out", opt.out, "artifact path (default stdout)");
  app.add_option("--path", opt.path_pref, "evaluation path preference")
      ->check(CLI::IsMember({"analytic-first", "numeric-only"}));
  app.add_option("--fd-step", opt.fd_step, "finite-difference step (default 1e-4*max(1,|j|))");
  app.add_option("--tmax", opt.tmax, "thermal curve maximum temperature (default 1.5)");
  app.add_option("--points", opt.points, "thermal curve point count (default 50)");
  app.add_option("--resolution", opt.resolution,
                 "classical angle-grid resolution (default 96)");
  app.add_option("--grid", opt.grid, "validate grid selection (default)");
  app.add_option("--svg-kind", opt.svg_kind, "svg plot kind override")
      ->check(CLI::IsMember({"heatmap", "lines"}));

  auto* c_spectrum = app.add_subcommand("spectrum", "eigenvalues of one configuration");
  auto* c_ground = app.add_subcommand("ground", "ground-state amplitudes");
  auto* c_corr = app.add_subcommand("correlations", "negativities, T3 and susceptibilities");
  auto* c_susc = app.add_subcommand("susceptibility", "chi_T3 and chi_M only");
  auto* c_thermal = app.add_subcommand("thermal", "Gibbs-state T3 point or curve");
  auto* c_sweep = app.add_subcommand("sweep", "parameter-grid evaluation");
  auto* c_classical = app.add_subcommand("classical", "classical XY triangle ground state");
  auto* c_validate = app.add_subcommand("validate", "closed-form vs numeric oracle run");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: usage: " << e.what() << "\n";
    return 2;
  }

  try {
    if (c_spectrum->parsed()) return run_spectrum(opt);
    if (c_ground->parsed()) return run_ground(opt);
    if (c_corr->parsed()) return run_correlations(opt);
    if (c_susc->parsed()) return run_susceptibility(opt);
    if (c_thermal->parsed()) return run_thermal(opt);
    if (c_sweep->parsed()) return run_sweep_cmd(opt);
    if (c_classical->parsed()) return run_classical(opt);
    if (c_validate->parsed()) return run_validate_cmd(opt);
    std::cerr << "error: usage: no subcommand given\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";  // what() carries the category
    switch (e.code()) {
      case errc::usage:
      case errc::invalid_config:
      case errc::invalid_parameter:
        return 2;
      default:
        return 3;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
