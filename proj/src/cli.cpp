#include "ptcalogero/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <future>
#include <sstream>

#include "ptcalogero/calogero_exact.hpp"
#include "ptcalogero/dynamics.hpp"
#include "ptcalogero/sutherland.hpp"

namespace ptcalogero::cli {

using io::Cell;
using io::format_number;
using json = nlohmann::ordered_json;

std::string_view to_string(Mode m) {
  switch (m) {
    case Mode::Simulate: return "simulate";
    case Mode::Exact: return "exact";
    case Mode::Stability: return "stability";
    case Mode::Perturb: return "perturb";
    case Mode::Spectrum: return "spectrum";
    case Mode::Wedges: return "wedges";
  }
  return "unknown";
}

std::vector<double> SweepSpec::values() const {
  std::vector<double> v;
  for (std::size_t i = 0; i < count; ++i)
    v.push_back(count == 1 ? start : start + (stop - start) * static_cast<double>(i) / static_cast<double>(count - 1));
  return v;
}

ModelParams RunConfig::params() const {
  switch (mode) {
    case Mode::Exact:
    case Mode::Spectrum:
      return ModelParams::calogero(omega, gamma, g);
    case Mode::Stability:
    case Mode::Perturb:
      return ModelParams::sutherland(omega, gamma, g);
    case Mode::Simulate:
    case Mode::Wedges:
      break;
  }
  return {omega, gamma, g, epsilon.value_or(0.0)};
}

double RunConfig::resolved_z1_0() const {
  return z1_0.value_or(mode == Mode::Simulate ? 0.5 : 0.0);
}

double RunConfig::resolved_t_max() const {
  return t_max.value_or(mode == Mode::Perturb ? 5.0 : 50.0);
}

Format RunConfig::resolved_format() const {
  return format.value_or(mode == Mode::Wedges ? Format::Json : Format::Csv);
}

namespace {

const std::vector<std::string> kSweepKeys = {"omega", "gamma", "g", "epsilon", "a", "b", "z1-0", "t-max"};

SweepSpec parse_sweep(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos) throw UsageError("--sweep expects NAME=START:STOP:COUNT");
  SweepSpec s;
  s.key = text.substr(0, eq);
  if (std::find(kSweepKeys.begin(), kSweepKeys.end(), s.key) == kSweepKeys.end())
    throw UsageError("--sweep: unknown parameter '" + s.key + "'");
  std::stringstream rest(text.substr(eq + 1));
  std::string a, b, c;
  if (!std::getline(rest, a, ':') || !std::getline(rest, b, ':') || !std::getline(rest, c) )
    throw UsageError("--sweep expects NAME=START:STOP:COUNT");
  try {
    std::size_t used = 0;
    s.start = std::stod(a, &used);
    if (used != a.size()) throw std::invalid_argument(a);
    s.stop = std::stod(b, &used);
    if (used != b.size()) throw std::invalid_argument(b);
    const long long n = std::stoll(c, &used);
    if (used != c.size() || n < 1) throw std::invalid_argument(c);
    s.count = static_cast<std::size_t>(n);
  } catch (const std::exception&) {
    throw UsageError("--sweep: malformed range '" + text + "'");
  }
  return s;
}

void apply_sweep_value(RunConfig& cfg, const std::string& key, double v) {
  if (key == "omega") cfg.omega = v;
  else if (key == "gamma") cfg.gamma = v;
  else if (key == "g") cfg.g = v;
  else if (key == "epsilon") cfg.epsilon = v;
  else if (key == "a") cfg.a = v;
  else if (key == "b") cfg.b = v;
  else if (key == "z1-0") cfg.z1_0 = v;
  else if (key == "t-max") cfg.t_max = v;
}

void validate(const RunConfig& cfg) {
  try {
    (void)ModelParams(cfg.omega, cfg.gamma, cfg.g, cfg.epsilon.value_or(0.0));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (cfg.epsilon) {
    const ModelParams resolved = cfg.params();
    if (cfg.mode != Mode::Simulate && cfg.mode != Mode::Wedges &&
        std::abs(*cfg.epsilon - resolved.epsilon) > 1e-12 * cfg.omega * cfg.omega)
      throw UsageError(std::string("--epsilon conflicts with the '") + std::string(to_string(cfg.mode)) +
                       "' subcommand, which fixes epsilon = " + format_number(resolved.epsilon));
  }
  auto finite = [](double v) { return std::isfinite(v); };
  if (!finite(cfg.a) || !finite(cfg.b) || !finite(cfg.v1_0) || !finite(cfg.resolved_z1_0()))
    throw UsageError("initial conditions must be finite");
  if (cfg.b == 0.0) throw UsageError("--b (z2 at t = 0) must be non-zero");
  if (!(cfg.resolved_t_max() > 0.0) || !finite(cfg.resolved_t_max()))
    throw UsageError("--t-max must be positive and finite");
  if (cfg.samples < 2) throw UsageError("--samples must be at least 2");
  if (!(cfg.rel_tol > 0.0) || !(cfg.abs_tol > 0.0)) throw UsageError("tolerances must be positive");
  if (cfg.levels < 1) throw UsageError("--levels must be at least 1");
  if (!cfg.output.empty()) {
    const std::filesystem::path parent = std::filesystem::path(cfg.output).parent_path();
    if (!parent.empty() && !std::filesystem::is_directory(parent))
      throw UsageError("output directory does not exist: " + parent.string());
  }
  if (cfg.sweep && cfg.output.empty()) throw UsageError("--sweep requires --output");
}

}  // namespace

RunConfig parse_args(const std::vector<std::string>& args) {
  CLI::App app{"PT-symmetric two-body Calogero/Sutherland model with balanced loss and gain",
               "ptcalogero"};
  app.set_config("--config", "", "Read flat 'key = value' settings from a file");
  app.allow_config_extras(CLI::config_extras_mode::error);
  app.require_subcommand(1, 1);
  app.fallthrough();

  RunConfig cfg;
  double epsilon = 0.0, z1_0 = 0.0, t_max = 0.0;
  std::string branch = "minus", format, sweep;

  app.add_option("--omega", cfg.omega, "Common oscillator frequency (> 0)")->required();
  app.add_option("--gamma", cfg.gamma, "Loss/gain rate")->capture_default_str();
  app.add_option("--g", cfg.g, "Inverse-square coupling")->capture_default_str();
  auto* o_eps = app.add_option("--epsilon", epsilon, "Linear coupling (simulate only; default 0)");
  app.add_option("--a", cfg.a, "Initial z2 velocity")->capture_default_str();
  app.add_option("--b", cfg.b, "Initial z2")->capture_default_str();
  auto* o_z1 = app.add_option("--z1-0", z1_0, "Initial z1 (simulate: 0.5, otherwise 0)");
  app.add_option("--v1-0", cfg.v1_0, "Initial z1 velocity for simulate")->capture_default_str();
  auto* o_tmax = app.add_option("--t-max", t_max, "End time (perturb: 5, otherwise 50)");
  app.add_option("--samples", cfg.samples, "Output grid points")->capture_default_str();
  app.add_option("--rel-tol", cfg.rel_tol, "Integrator relative tolerance")->capture_default_str();
  app.add_option("--abs-tol", cfg.abs_tol, "Integrator absolute tolerance")->capture_default_str();
  app.add_option("--levels", cfg.levels, "Number of quantum levels")->capture_default_str();
  app.add_option("--branch", branch, "Gaussian scale sign")->check(CLI::IsMember({"plus", "minus"}));
  auto* o_format = app.add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--output", cfg.output, "Output path (default: standard output)");
  auto* o_sweep = app.add_option("--sweep", sweep, "NAME=START:STOP:COUNT, one run per value");
  app.add_flag("--dump-config", cfg.dump_config, "Print the resolved configuration and exit");

  const std::pair<Mode, const char*> modes[] = {
      {Mode::Simulate, "Numerical trajectory in both frames"},
      {Mode::Exact, "Closed-form Calogero solution with quadrature and numerical cross-checks"},
      {Mode::Stability, "Sutherland equilibrium and eigenvalue analysis"},
      {Mode::Perturb, "Numerical vs first-order perturbative x(t), y(t)"},
      {Mode::Spectrum, "Quantum energy ladder, both branches, finite-difference oracle"},
      {Mode::Wedges, "Stokes wedge geometry of the ground state"},
  };
  std::vector<std::pair<Mode, CLI::App*>> subs;
  for (const auto& [mode, help] : modes) subs.emplace_back(mode, app.add_subcommand(std::string(to_string(mode)), help));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested(app.help());
  } catch (const CLI::ParseError& e) {
    throw UsageError(std::string(e.what()) + "\nRun with --help for the list of options.");
  }

  for (const auto& [mode, sub] : subs)
    if (sub->parsed()) cfg.mode = mode;
  if (o_eps->count()) cfg.epsilon = epsilon;
  if (o_z1->count()) cfg.z1_0 = z1_0;
  if (o_tmax->count()) cfg.t_max = t_max;
  cfg.branch = branch == "plus" ? quantum::Branch::Plus : quantum::Branch::Minus;
  if (o_format->count()) cfg.format = format == "json" ? Format::Json : Format::Csv;
  if (o_sweep->count()) cfg.sweep = parse_sweep(sweep);

  validate(cfg);
  return cfg;
}

std::string dump_config(const RunConfig& cfg) {
  std::ostringstream os;
  os << "# mode: " << to_string(cfg.mode) << '\n';
  os << "omega = " << format_number(cfg.omega) << '\n';
  os << "gamma = " << format_number(cfg.gamma) << '\n';
  os << "g = " << format_number(cfg.g) << '\n';
  if (cfg.epsilon) os << "epsilon = " << format_number(*cfg.epsilon) << '\n';
  os << "a = " << format_number(cfg.a) << '\n';
  os << "b = " << format_number(cfg.b) << '\n';
  if (cfg.z1_0) os << "z1-0 = " << format_number(*cfg.z1_0) << '\n';
  os << "v1-0 = " << format_number(cfg.v1_0) << '\n';
  if (cfg.t_max) os << "t-max = " << format_number(*cfg.t_max) << '\n';
  os << "samples = " << cfg.samples << '\n';
  os << "rel-tol = " << format_number(cfg.rel_tol) << '\n';
  os << "abs-tol = " << format_number(cfg.abs_tol) << '\n';
  os << "levels = " << cfg.levels << '\n';
  os << "branch = " << quantum::to_string(cfg.branch) << '\n';
  if (cfg.format) os << "format = " << (*cfg.format == Format::Json ? "json" : "csv") << '\n';
  if (!cfg.output.empty()) os << "output = \"" << cfg.output << "\"\n";
  if (cfg.sweep)
    os << "sweep = \"" << cfg.sweep->key << '=' << format_number(cfg.sweep->start) << ':'
       << format_number(cfg.sweep->stop) << ':' << cfg.sweep->count << "\"\n";
  return os.str();
}

namespace {

json params_json(const ModelParams& p) {
  return {{"omega", p.omega}, {"gamma", p.gamma}, {"g", p.g}, {"epsilon", p.epsilon}};
}

IntegratorOptions integrator_options(const RunConfig& cfg) {
  IntegratorOptions o;
  o.rel_tol = cfg.rel_tol;
  o.abs_tol = cfg.abs_tol;
  o.max_samples = cfg.samples;
  return o;
}

json diagnostics_json(const Diagnostics& d) {
  json j = {{"termination", to_string(d.termination)},
            {"initial_energy", d.initial_energy},
            {"max_energy_drift", d.max_energy_drift}};
  j["max_pi_drift"] = d.max_pi_drift ? json(*d.max_pi_drift) : json();
  j["accepted_steps"] = d.accepted_steps;
  j["rejected_steps"] = d.rejected_steps;
  return j;
}

io::Table compute_simulate(const RunConfig& cfg) {
  const ModelParams p = cfg.params();
  const PhaseStateZ init{cfg.resolved_z1_0(), cfg.b, cfg.v1_0, cfg.a, 0.0};
  const TrajectoryZ traj = integrate(init, p, cfg.resolved_t_max(), integrator_options(cfg));
  io::Table t;
  t.columns = {"t", "x", "y", "z1", "z2", "H", "Pi"};
  const bool calogero = p.is_calogero();
  for (const auto& s : traj.samples) {
    const PhaseStateXY xy = from_normal(s);
    t.rows.push_back({s.t, xy.x, xy.y, s.z1, s.z2, energy_xy(xy, p),
                      calogero ? Cell(pi_invariant(s, p)) : Cell(std::monostate{})});
  }
  t.metadata["mode"] = "simulate";
  t.metadata["params"] = params_json(p);
  t.metadata["initial"] = {{"z1", init.z1}, {"z2", init.z2}, {"v1", init.v1}, {"v2", init.v2}};
  t.metadata["diagnostics"] = diagnostics_json(traj.diagnostics);
  return t;
}

io::Table compute_exact(const RunConfig& cfg) {
  const ModelParams p = cfg.params();
  const calogero::EPConstants c = calogero::ep_constants(cfg.a, cfg.b, p, cfg.resolved_z1_0());
  const double t_max = cfg.resolved_t_max();
  const TrajectoryZ traj = integrate(calogero::initial_state(c), p, t_max, integrator_options(cfg));

  std::vector<double> times;
  for (const auto& s : traj.samples) times.push_back(s.t);
  const std::vector<double> quad = calogero::z1_quadrature(times, c);

  io::Table t;
  t.columns = {"t", "z1_exact", "z1_quadrature", "z2_exact", "z1_numeric", "z2_numeric"};
  double max_elliptic_vs_quad = 0.0, max_exact_vs_numeric = 0.0;
  for (std::size_t i = 0; i < traj.samples.size(); ++i) {
    const auto& s = traj.samples[i];
    const double z1e = calogero::z1_exact(s.t, c);
    const double z2e = calogero::z2_exact(s.t, c);
    max_elliptic_vs_quad = std::max(max_elliptic_vs_quad, std::abs(z1e - quad[i]));
    max_exact_vs_numeric = std::max({max_exact_vs_numeric, std::abs(quad[i] - s.z1), std::abs(z2e - s.z2)});
    t.rows.push_back({s.t, z1e, quad[i], z2e, s.z1, s.z2});
  }
  t.metadata["mode"] = "exact";
  t.metadata["params"] = params_json(p);
  t.metadata["constants"] = {{"a", c.a}, {"b", c.b}, {"A", c.A}, {"B", c.B}, {"C", c.C},
                             {"D", c.D}, {"k_sq", c.k_sq}, {"I", c.I}, {"Omega", c.omega_eff}};
  t.metadata["phase"] = calogero::to_string(calogero::effective_frequency(p).phase);
  t.metadata["max_abs_elliptic_minus_quadrature"] = max_elliptic_vs_quad;
  t.metadata["max_abs_exact_minus_numeric"] = max_exact_vs_numeric;
  t.metadata["warnings"] = c.warnings;
  t.metadata["diagnostics"] = diagnostics_json(traj.diagnostics);
  return t;
}

io::Table compute_stability(const RunConfig& cfg) {
  const ModelParams p = cfg.params();
  const sutherland::StabilityReport r = sutherland::analyze_stability(p);
  io::Table t;
  t.columns = {"set", "index", "re", "im"};
  const std::pair<const char*, const sutherland::Spectrum4*> sets[] = {
      {"formula", &r.eigs_formula}, {"characteristic", &r.eigs_char}, {"numeric", &r.eigs_numeric}};
  for (const auto& [name, eigs] : sets)
    for (std::size_t i = 0; i < 4; ++i)
      t.rows.push_back({std::string(name), static_cast<long long>(i), (*eigs)[i].real(), (*eigs)[i].imag()});
  t.metadata["mode"] = "stability";
  t.metadata["params"] = params_json(p);
  t.metadata["equilibrium"] = {{"p", r.equilibrium.p}, {"q", r.equilibrium.q},
                               {"z1", r.equilibrium.z1}, {"z2", r.equilibrium.z2}};
  json jac = json::array();
  for (const auto& row : r.jacobian) jac.push_back(row);
  t.metadata["jacobian"] = jac;
  t.metadata["P"] = r.P;
  t.metadata["classification"] = sutherland::to_string(r.classification);
  t.metadata["marginal"] = r.marginal;
  t.metadata["discrepancy_flag"] = r.discrepancy_flag;
  t.metadata["claimed_range_bound"] = r.claimed_range_bound;
  t.metadata["within_claimed_range"] = r.within_claimed_range;
  return t;
}

io::Table compute_perturb(const RunConfig& cfg) {
  const ModelParams p = cfg.params();
  const sutherland::Comparison cmp =
      sutherland::compare_perturbative_numeric(p, cfg.resolved_t_max(), integrator_options(cfg));
  io::Table t;
  t.columns = {"t", "x_num", "y_num", "x_pert", "y_pert"};
  for (const auto& r : cmp.rows) t.rows.push_back({r.t, r.x_num, r.y_num, r.x_pert, r.y_pert});
  t.metadata["mode"] = "perturb";
  t.metadata["params"] = params_json(p);
  t.metadata["initial"] = {{"z1", sutherland::PerturbativeSolution::kZ1Initial},
                           {"z2", sutherland::PerturbativeSolution::kZ2Initial},
                           {"v1", 0.0},
                           {"v2", 0.0}};
  t.metadata["max_deviation"] = cmp.max_deviation;
  t.metadata["termination"] = to_string(cmp.termination);
  return t;
}

io::Table compute_spectrum(const RunConfig& cfg) {
  const ModelParams p = cfg.params();
  const quantum::QuantumParams minus = quantum::quantum_params(p, quantum::Branch::Minus);
  const quantum::QuantumParams plus = quantum::quantum_params(p, quantum::Branch::Plus);
  const quantum::QuantumParams& selected = cfg.branch == quantum::Branch::Plus ? plus : minus;
  const auto lad_minus = quantum::energy_ladder(minus, cfg.levels);
  const auto lad_plus = quantum::energy_ladder(plus, cfg.levels);

  std::optional<quantum::FdSpectrum> fd;
  if (plus.phase == quantum::Phase::Unbroken) fd = quantum::fd_spectrum_oracle(plus, cfg.levels);

  io::Table t;
  t.columns = {"m", "n", "E_minus_re", "E_minus_im", "E_plus_re", "E_plus_im", "E_fd"};
  for (std::size_t m = 0; m < cfg.levels; ++m) {
    t.rows.push_back({static_cast<long long>(m), static_cast<long long>(lad_minus.n[m]),
                      lad_minus.energies[m].real(), lad_minus.energies[m].imag(),
                      lad_plus.energies[m].real(), lad_plus.energies[m].imag(),
                      fd ? Cell(fd->energies[m]) : Cell(std::monostate{})});
  }
  t.metadata["mode"] = "spectrum";
  t.metadata["params"] = params_json(p);
  t.metadata["phase"] = calogero::to_string(selected.phase);
  t.metadata["lambda"] = selected.lambda;
  t.metadata["lambda_roots"] = {selected.lambda_plus, selected.lambda_minus};
  t.metadata["k"] = selected.k;
  t.metadata["selected_branch"] = quantum::to_string(cfg.branch);
  t.metadata["gauss_scale"] = {selected.gauss_scale.real(), selected.gauss_scale.imag()};
  const auto e0 = cfg.branch == quantum::Branch::Plus ? lad_plus.energies[0] : lad_minus.energies[0];
  t.metadata["ground_state_energy"] = {e0.real(), e0.imag()};
  t.metadata["repulsive_core"] = selected.repulsive_core;
  if (selected.phase == quantum::Phase::Unbroken) {
    json polys = json::array();
    for (std::size_t m = 0; m < cfg.levels; ++m) {
      const int mi = static_cast<int>(m);
      const auto s = quantum::series_coefficients(quantum::ladder_energy(selected, mi), selected, 2 * m + 2);
      polys.push_back(s.coefficients);
    }
    t.metadata["polynomial_coefficients"] = polys;
    const double e_top = quantum::ladder_energy(selected, static_cast<int>(cfg.levels) - 1);
    const double e_bot = quantum::ladder_energy(selected, 0);
    const double lo = std::min(e_top, e_bot) - 1.0, hi = std::max(e_top, e_bot) + 1.0;
    t.metadata["termination_scan"] = quantum::termination_scan(selected, lo, hi, 1001, 2 * cfg.levels).energies;
  }
  if (fd) {
    t.metadata["fd_relative_change"] = fd->relative_change;
    t.metadata["fd_converged"] = fd->converged;
  }
  return t;
}

io::Table compute_wedges(const RunConfig& cfg) {
  const double coefficient = 0.5 * cfg.gamma * cfg.resolved_z1_0();
  io::Table t;
  t.columns = {"center_angle", "opening_angle"};
  for (const auto& w : quantum::stokes_wedges(coefficient)) t.rows.push_back({w.center_angle, w.opening_angle});
  t.metadata["mode"] = "wedges";
  t.metadata["gamma"] = cfg.gamma;
  t.metadata["z1"] = cfg.resolved_z1_0();
  t.metadata["linear_coefficient"] = coefficient;
  return t;
}

std::string sweep_output_path(const std::string& base, std::size_t i) {
  const std::filesystem::path p(base);
  std::filesystem::path out = p.parent_path() / (p.stem().string() + "_" + std::to_string(i) + p.extension().string());
  return out.string();
}

int run_single(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  io::Table table;
  try {
    table = compute(cfg);
  } catch (const IntegrationError& e) {
    err << "error: " << e.what() << " (last good state t = " << format_number(e.last_good_state().t) << ")\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }

  const bool json_out = cfg.resolved_format() == Format::Json;
  std::ofstream file;
  if (!cfg.output.empty()) {
    file.open(cfg.output, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << cfg.output << " for writing\n";
      return 1;
    }
  }
  std::ostream& data = cfg.output.empty() ? out : file;
  if (json_out) {
    data << io::to_json(table).dump(2) << '\n';
  } else {
    io::write_csv(data, table);
    if (cfg.output.empty()) {
      err << "# metadata: " << table.metadata.dump() << '\n';
    } else {
      std::ofstream meta(cfg.output + ".meta.json", std::ios::binary);
      meta << table.metadata.dump(2) << '\n';
      if (!meta) {
        err << "error: cannot write metadata next to " << cfg.output << '\n';
        return 1;
      }
    }
  }
  if (!data) {
    err << "error: write failed\n";
    return 1;
  }
  return 0;
}

}  // namespace

io::Table compute(const RunConfig& cfg) {
  switch (cfg.mode) {
    case Mode::Simulate: return compute_simulate(cfg);
    case Mode::Exact: return compute_exact(cfg);
    case Mode::Stability: return compute_stability(cfg);
    case Mode::Perturb: return compute_perturb(cfg);
    case Mode::Spectrum: return compute_spectrum(cfg);
    case Mode::Wedges: return compute_wedges(cfg);
  }
  throw std::logic_error("unknown mode");
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (!cfg.sweep) return run_single(cfg, out, err);

  const std::vector<double> values = cfg.sweep->values();
  std::vector<std::future<std::pair<int, std::string>>> jobs;
  for (std::size_t i = 0; i < values.size(); ++i) {
    RunConfig one = cfg;
    one.sweep.reset();
    apply_sweep_value(one, cfg.sweep->key, values[i]);
    one.output = sweep_output_path(cfg.output, i);
    jobs.push_back(std::async(std::launch::async, [one] {
      std::ostringstream o, e;
      try {
        validate(one);
      } catch (const UsageError& u) {
        return std::pair<int, std::string>{1, std::string("error: ") + u.what() + "\n"};
      }
      const int code = run_single(one, o, e);
      return std::pair<int, std::string>{code, e.str()};
    }));
  }
  int worst = 0;
  for (auto& j : jobs) {
    auto [code, msg] = j.get();
    err << msg;
    worst = std::max(worst, code);
  }
  return worst;
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  try {
    cfg = parse_args(args);
  } catch (const HelpRequested& h) {
    out << h.what();
    return 0;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }
  if (cfg.dump_config) {
    out << dump_config(cfg);
    return 0;
  }
  return run(cfg, out, err);
}

}  // namespace ptcalogero::cli
