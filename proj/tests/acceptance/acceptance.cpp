// Acceptance gate: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ptcalogero/calogero_exact.hpp"
#include "ptcalogero/cli.hpp"
#include "ptcalogero/dynamics.hpp"
#include "ptcalogero/quantum.hpp"
#include "ptcalogero/sutherland.hpp"

using namespace ptcalogero;

namespace {

constexpr double pi = std::numbers::pi;

// Pinned tolerances.
constexpr double kEnergyDriftTol = 1e-8;
constexpr double kPiDriftTol = 1e-10;
constexpr double kExactVsNumericTol = 1e-6;
constexpr double kEllipticVsQuadratureTol = 1e-6;
constexpr double kSlopeRelTol = 0.01;
constexpr double kBlowupDeadline = 200.0;
constexpr double kPerturbDeviationTol = 0.05;
constexpr double kPerturbEarlyWindow = 0.5;
constexpr double kPerturbEarlyTol = 0.01;
constexpr double kGoldenRelTol = 1e-12;
constexpr double kEigenTol = 1e-10;
constexpr double kJacobianTol = 1e-6;
constexpr double kLadderTol = 1e-12;
constexpr double kFdRelTol = 1e-3;
constexpr double kPolyRelTol = 1e-14;
constexpr double kResidualTol = 1e-6;
constexpr double kNegativeControlMin = 1e-2;
constexpr double kAngleTol = 1e-15;

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

// Least-squares line through (t, v).
std::pair<double, double> fit_line(const std::vector<double>& t, const std::vector<double>& v) {
  const double n = static_cast<double>(t.size());
  double st = 0, sv = 0, stt = 0, stv = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    st += t[i];
    sv += v[i];
    stt += t[i] * t[i];
    stv += t[i] * v[i];
  }
  const double slope = (n * stv - st * sv) / (n * stt - st * st);
  return {slope, (sv - slope * st) / n};
}

Outcome conservation() {
  std::mt19937_64 rng(424242);
  auto u = [&](double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); };
  double worst_h = 0.0, worst_pi = 0.0;
  int incomplete = 0;
  for (int k = 0; k < 20; ++k) {
    const double omega = u(0.8, 1.5);
    const double gamma = u(-0.3, 0.3) * omega;
    const double g = u(-2.0, -0.1);
    const double eps[] = {-omega * omega, 0.0, 0.3};
    const ModelParams p(omega, gamma, g, eps[k % 3]);
    const double z2 = u(0.5, 1.5);
    const PhaseStateZ s0(u(-0.5, 0.5), z2, u(-0.3, 0.3), u(-0.3, 0.3));
    IntegratorOptions opts;
    opts.max_samples = 1001;
    const auto tr = integrate(s0, p, 100.0, opts);
    if (tr.diagnostics.termination != Termination::Completed) ++incomplete;
    worst_h = std::max(worst_h, tr.diagnostics.max_energy_drift);
    if (tr.diagnostics.max_pi_drift) worst_pi = std::max(worst_pi, *tr.diagnostics.max_pi_drift);
  }
  return {incomplete == 0 && worst_h <= kEnergyDriftTol && worst_pi <= kPiDriftTol,
          fmt("20 draws, max H drift %.2e (tol %.0e), max Pi drift %.2e (tol %.0e), incomplete runs %d", worst_h,
              kEnergyDriftTol, worst_pi, kPiDriftTol, incomplete)};
}

Outcome exact_equivalence() {
  const auto p = ModelParams::calogero(1.0, 0.3, -0.5);
  double worst_num = 0.0, worst_quad = 0.0;
  for (double a : {0.9, 1.0, 1.1})
    for (double b : {0.9, 1.0, 1.1}) {
      const auto c = calogero::ep_constants(a, b, p);
      IntegratorOptions opts;
      opts.max_samples = 2001;
      const auto tr = integrate(calogero::initial_state(c), p, 50.0, opts);
      if (tr.diagnostics.termination != Termination::Completed) return {false, "integration ended early"};
      std::vector<double> times;
      for (const auto& s : tr.samples) times.push_back(s.t);
      const auto quad = calogero::z1_quadrature(times, c);
      for (std::size_t i = 0; i < times.size(); ++i) {
        const auto& s = tr.samples[i];
        const double z1e = calogero::z1_exact(s.t, c);
        worst_num = std::max({worst_num, std::abs(z1e - s.z1), std::abs(calogero::z2_exact(s.t, c) - s.z2)});
        worst_quad = std::max(worst_quad, std::abs(z1e - quad[i]));
      }
    }
  return {worst_num <= kExactVsNumericTol && worst_quad <= kEllipticVsQuadratureTol,
          fmt("a,b in {0.9,1,1.1}^2 on [0,50]: exact vs numeric %.2e (tol %.0e), elliptic vs quadrature %.2e "
              "(tol %.0e)",
              worst_num, kExactVsNumericTol, worst_quad, kEllipticVsQuadratureTol)};
}

Outcome instability_dichotomy() {
  const auto p = ModelParams::calogero(1.0, 0.3, -0.5);
  IntegratorOptions opts;
  opts.max_samples = 20001;

  // (a) a = 1, b = 1: bounded with no trend. "No trend" means the fitted
  // secular change over the window is no larger than the periodic excursion
  // about the fit, and the window [0, 500] reaches no further than twice the
  // excursion seen on [0, 50].
  const auto ca = calogero::ep_constants(1.0, 1.0, p);
  const auto ta = integrate(calogero::initial_state(ca), p, 500.0, opts);
  std::vector<double> t, z1;
  double max_500 = 0.0, max_50 = 0.0;
  for (const auto& s : ta.samples) {
    t.push_back(s.t);
    z1.push_back(s.z1);
    max_500 = std::max(max_500, std::abs(s.z1));
    if (s.t <= 50.0) max_50 = std::max(max_50, std::abs(s.z1));
  }
  const auto [slope_a, icpt_a] = fit_line(t, z1);
  double excursion = 0.0;
  for (std::size_t i = 0; i < t.size(); ++i) excursion = std::max(excursion, std::abs(z1[i] - slope_a * t[i] - icpt_a));
  const double trend = std::abs(slope_a) * 500.0;
  const bool bounded = std::isfinite(max_500) && ta.diagnostics.termination == Termination::Completed &&
                       trend <= excursion && max_500 <= 2.0 * max_50;

  // (b) a = 0, b = 1: linear growth at rate 2 gamma <z2>, <z2> measured on
  // the trajectory over whole periods.
  const auto cb = calogero::ep_constants(0.0, 1.0, p);
  const auto tb = integrate(calogero::initial_state(cb), p, 500.0, opts);
  const double period = calogero::z2_period(cb);
  const double t_avg = std::floor(500.0 / period) * period;
  std::vector<double> tt, zz;
  double sum = 0.0, prev_t = 0.0, prev_z = tb.samples.front().z2;
  for (const auto& s : tb.samples) {
    tt.push_back(s.t);
    zz.push_back(s.z1);
    if (s.t > 0.0 && s.t <= t_avg) sum += 0.5 * (s.z2 + prev_z) * (s.t - prev_t);
    if (s.t <= t_avg) {
      prev_t = s.t;
      prev_z = s.z2;
    }
  }
  const double mean_z2 = sum / prev_t;
  const double slope_b = fit_line(tt, zz).first;
  const double predicted = 2.0 * p.gamma * mean_z2;
  const double rel = std::abs(std::abs(slope_b) - predicted) / predicted;
  const bool growth = tb.diagnostics.termination == Termination::Completed && rel <= kSlopeRelTol;

  return {bounded && growth,
          fmt("(a) a=1,b=1: slope %.4f, trend over [0,500] %.2f vs excursion %.3f, max|z1| %.2f on [0,500] vs %.2f "
              "on [0,50] -> %s; (b) a=0,b=1: slope %.5f vs 2*gamma*<z2> %.5f, rel err %.1e (tol %.0e) -> %s",
              slope_a, trend, excursion, max_500, max_50, bounded ? "bounded" : "NOT bounded (secular drift)",
              slope_b, predicted, rel, kSlopeRelTol, growth ? "ok" : "mismatch")};
}

Outcome phase_boundary() {
  const double omega = 1.0, gc = omega / std::sqrt(2.0);
  const bool flips = calogero::classify_phase(omega, gc - 0.01) == calogero::Phase::Unbroken &&
                     calogero::classify_phase(omega, gc + 0.01) == calogero::Phase::Broken &&
                     calogero::classify_phase(omega, -gc - 0.01) == calogero::Phase::Broken;

  auto run = [&](double gamma) {
    const auto p = ModelParams::calogero(omega, gamma, -0.5);
    IntegratorOptions opts;
    opts.max_samples = 401;
    return integrate(PhaseStateZ(0.0, 1.0, -2.0 * gamma, 0.0), p, kBlowupDeadline, opts);
  };
  const auto broken = run(gc + 0.01);
  const auto unbroken = run(gc - 0.01);
  const bool blew = broken.diagnostics.termination == Termination::Blowup &&
                    broken.samples.back().t < kBlowupDeadline;
  const bool stayed = unbroken.diagnostics.termination == Termination::Completed;

  int mismatches = 0;
  std::vector<double> gammas = {gc, -gc, gc - 0.01, gc + 0.01};
  for (int i = 0; i <= 2000; ++i) gammas.push_back(1.5 * i / 2000.0);
  for (double w : {0.5, 1.0, 2.3})
    for (double gm : gammas) {
      const double gamma = gm * w;
      if (quantum::quantum_phase(ModelParams::calogero(w, gamma, -0.5)) != calogero::classify_phase(w, gamma))
        ++mismatches;
      if (std::abs(gm) == gc && calogero::classify_phase(w, gamma) != calogero::Phase::Boundary) ++mismatches;
    }
  return {flips && blew && stayed && mismatches == 0,
          fmt("classifier flips at omega/sqrt2 +- 0.01: %s; broken run blow-up at t = %.1f (< %.0f), unbroken run "
              "%s; classical/quantum mismatches %d",
              flips ? "yes" : "no", broken.samples.back().t, kBlowupDeadline,
              std::string(to_string(unbroken.diagnostics.termination)).c_str(), mismatches)};
}

// Numbers of a CSV body compared field by field.
double golden_difference(const std::string& produced, const std::string& path, bool& header_ok) {
  std::ifstream in(path);
  std::stringstream want;
  want << in.rdbuf();
  std::istringstream a(want.str()), b(produced);
  std::string la, lb;
  double worst = in ? 0.0 : INFINITY;
  header_ok = std::getline(a, la) && std::getline(b, lb) && la == lb;
  while (true) {
    const bool ga = static_cast<bool>(std::getline(a, la)), gb = static_cast<bool>(std::getline(b, lb));
    if (ga != gb) return INFINITY;
    if (!ga) break;
    std::stringstream fa(la), fb(lb);
    std::string xa, xb;
    while (std::getline(fa, xa, ',')) {
      if (!std::getline(fb, xb, ',')) return INFINITY;
      const double va = std::stod(xa), vb = std::stod(xb);
      worst = std::max(worst, std::abs(va - vb) / std::max(1.0, std::abs(va)));
    }
  }
  return worst;
}

Outcome perturbative_comparison() {
  const auto p = ModelParams::sutherland(1.0, 0.1, -0.5);
  const auto cmp = sutherland::compare_perturbative_numeric(p, 5.0);
  double early = 0.0;
  for (const auto& r : cmp.rows)
    if (r.t <= kPerturbEarlyWindow) early = std::max({early, std::abs(r.dx), std::abs(r.dy)});

  std::ostringstream out, err;
  const int code = cli::main_entry({"--omega", "1", "--gamma", "0.1", "--g", "-0.5", "perturb", "--samples", "26"},
                                   out, err);
  bool header_ok = false;
  const double golden = code == 0 ? golden_difference(out.str(), GOLDEN_DIR "/perturb.csv", header_ok) : INFINITY;

  return {cmp.termination == Termination::Completed && cmp.max_deviation <= kPerturbDeviationTol &&
              early <= kPerturbEarlyTol && header_ok && golden <= kGoldenRelTol,
          fmt("max deviation on [0,5] %.4f (tol %.2f), on [0,%.1f] %.1e (tol %.0e), golden header %s, max rel "
              "diff %.1e (tol %.0e)",
              cmp.max_deviation, kPerturbDeviationTol, kPerturbEarlyWindow, early, kPerturbEarlyTol,
              header_ok ? "ok" : "MISMATCH", golden, kGoldenRelTol)};
}

Outcome stability_analysis() {
  double worst_eig = 0.0, worst_jac = 0.0;
  int disagreements = 0;
  std::string claimed;
  for (int i = 0; i < 20; ++i) {
    const double gamma = 0.05 + 0.1 * i;
    const auto p = ModelParams::sutherland(1.0, gamma, -0.5);
    const auto r = sutherland::analyze_stability(p);
    worst_eig = std::max(worst_eig, sutherland::multiset_distance(r.eigs_numeric, r.eigs_char));

    // central differences of the flow at the equilibrium, order (v1, v2, z1, z2)
    const double base[4] = {r.equilibrium.p, r.equilibrium.q, r.equilibrium.z1, r.equilibrium.z2};
    for (int j = 0; j < 4; ++j) {
      double up[4], dn[4];
      std::copy(base, base + 4, up);
      std::copy(base, base + 4, dn);
      up[j] += 1e-6;
      dn[j] -= 1e-6;
      const auto fu = eom_rhs(PhaseStateZ(up[2], up[3], up[0], up[1]), p);
      const auto fd = eom_rhs(PhaseStateZ(dn[2], dn[3], dn[0], dn[1]), p);
      const double col[4] = {(fu.dv1 - fd.dv1) / 2e-6, (fu.dv2 - fd.dv2) / 2e-6, (fu.dz1 - fd.dz1) / 2e-6,
                             (fu.dz2 - fd.dz2) / 2e-6};
      for (int k = 0; k < 4; ++k) worst_jac = std::max(worst_jac, std::abs(col[k] - r.jacobian[k][j]));
    }

    const auto probe = sutherland::probe_nonlinear_stability(p);
    if (probe.exceeded != (r.classification == sutherland::Stability::Unstable)) ++disagreements;
  }
  const auto r0 = sutherland::analyze_stability(ModelParams::sutherland(1.0, 0.0, -0.5));
  // Report where the claimed range and the spectrum part ways.
  const auto at_claim = sutherland::analyze_stability(ModelParams::sutherland(1.0, 1.0, -0.5));
  claimed = fmt("claimed stable range |gamma| < %.4f; at gamma = 1 (inside it) spectrum says %s",
                at_claim.claimed_range_bound, std::string(sutherland::to_string(at_claim.classification)).c_str());
  return {worst_eig <= kEigenTol && worst_jac <= kJacobianTol && r0.discrepancy_flag && disagreements == 0,
          fmt("20-point gamma grid: eigensolver vs characteristic %.1e (tol %.0e), Jacobian vs FD %.1e (tol %.0e), "
              "closed-form discrepancy at gamma=0 %s, probe/eigen disagreements %d; %s",
              worst_eig, kEigenTol, worst_jac, kJacobianTol, r0.discrepancy_flag ? "raised" : "NOT raised",
              disagreements, claimed.c_str())};
}

Outcome quantum_spectrum() {
  double worst_scan = 0.0, worst_fd = 0.0, worst_poly = 0.0, worst_res = 0.0, weakest_control = INFINITY;
  bool scan_count_ok = true;
  std::vector<double> z;
  for (int i = 0; i < 60; ++i) z.push_back(0.1 + 2.9 * i / 59.0);
  for (double gamma : {0.0, 0.3, 0.5}) {
    const auto p = ModelParams::calogero(1.0, gamma, -0.5);
    const auto q = quantum::quantum_params(p, quantum::Branch::Minus);
    const auto qp = quantum::quantum_params(p, quantum::Branch::Plus);

    const auto scan = quantum::termination_scan(q, 0.0, quantum::ladder_energy(q, 2) + 0.5, 2001, 8);
    if (scan.energies.size() != 3) scan_count_ok = false;
    for (std::size_t m = 0; m < std::min<std::size_t>(3, scan.energies.size()); ++m)
      worst_scan = std::max(worst_scan, std::abs(scan.energies[m] - quantum::ladder_energy(q, static_cast<int>(m))));

    const auto fd = quantum::fd_spectrum_oracle(qp, 3);
    for (int m = 0; m < 3; ++m) {
      const double e = quantum::ladder_energy(qp, m);
      worst_fd = std::max(worst_fd, std::abs(fd.energies[m] - e) / std::abs(e));
    }

    for (const auto* qq : {&q, &qp}) {
      const double C = qq->real_scale(), L = qq->lambda;
      const auto s2 = quantum::series_coefficients(quantum::ladder_energy(*qq, 1), *qq, 8);
      const auto s4 = quantum::series_coefficients(quantum::ladder_energy(*qq, 2), *qq, 8);
      auto rel = [](double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); };
      worst_poly = std::max({worst_poly, rel(s2.coefficients[2], -4 * C / (1 + 2 * L)),
                             rel(s4.coefficients[2], -8 * C / (1 + 2 * L)),
                             rel(s4.coefficients[4], 16 * C * C / ((3 + 2 * L) * (1 + 2 * L)))});
      if (!s2.terminated || s2.degree != 2 || !s4.terminated || s4.degree != 4) worst_poly = INFINITY;
      for (int m = 0; m < 3; ++m) {
        worst_res = std::max(worst_res, quantum::eigenfunction_residual(m, *qq, z));
        weakest_control = std::min(
            weakest_control, quantum::eigenfunction_residual(m, *qq, z, quantum::ladder_energy(*qq, m) + 0.1));
      }
    }
  }
  const auto q0 = quantum::quantum_params(ModelParams::calogero(1.0, 0.0, -0.5), quantum::Branch::Minus);
  const double e0 = quantum::ladder_energy(q0, 0);
  const bool e0_ok = std::abs(e0 - (1 + std::sqrt(2.0))) <= kLadderTol;
  return {scan_count_ok && worst_scan <= kLadderTol && worst_fd <= kFdRelTol && e0_ok && worst_poly <= kPolyRelTol &&
              worst_res < kResidualTol && weakest_control > kNegativeControlMin,
          fmt("gamma in {0,0.3,0.5}: (a) scan vs ladder %.1e (tol %.0e); (b) FD vs normalisable ladder rel %.1e "
              "(tol %.0e); (c) E0 = %.12f; (d) phi2/phi4 coefficients rel %.1e (tol %.0e); (e) residual %.1e "
              "(tol %.0e), perturbed-E residual >= %.2e (min %.0e)",
              worst_scan, kLadderTol, worst_fd, kFdRelTol, e0, worst_poly, kPolyRelTol, worst_res, kResidualTol,
              weakest_control, kNegativeControlMin)};
}

Outcome stokes_wedges() {
  auto near = [](double a, double b) { return std::abs(a - b) <= kAngleTol; };
  const auto neg = quantum::stokes_wedges(0.5 * 0.3 * -1.0);  // gamma > 0, z1 < 0
  const auto pos = quantum::stokes_wedges(0.5 * 0.3 * 1.0);   // gamma > 0, z1 > 0
  const auto zero = quantum::stokes_wedges(0.0);               // gamma = 0
  const bool ok = neg.size() == 1 && near(neg[0].center_angle, pi / 2) && near(neg[0].opening_angle, pi / 2) &&
                  pos.size() == 1 && near(pos[0].center_angle, -pi / 2) && near(pos[0].opening_angle, pi / 2) &&
                  zero.size() == 2 && near(zero[0].center_angle, pi / 2) && near(zero[1].center_angle, -pi / 2) &&
                  near(zero[0].opening_angle, pi / 2) && near(zero[1].opening_angle, pi / 2);
  return {ok, "z1<0: centre +pi/2; z1>0: centre -pi/2; gamma=0: pair at +-pi/2; opening pi/2 throughout"};
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"conservation", conservation},
      {"exact-solution equivalence", exact_equivalence},
      {"instability dichotomy", instability_dichotomy},
      {"phase boundary", phase_boundary},
      {"perturbative reproduction", perturbative_comparison},
      {"stability analysis", stability_analysis},
      {"quantum spectrum", quantum_spectrum},
      {"Stokes wedges", stokes_wedges},
  };
  int failed = 0, index = 0;
  for (const auto& [name, check] : criteria) {
    ++index;
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("%s %d %s: %s\n", o.pass ? "PASS" : "FAIL", index, name, o.detail.c_str());
    std::fflush(stdout);
  }
  return failed;
}
