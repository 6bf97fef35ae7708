#include "ptcalogero/sutherland.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace ptcalogero::sutherland {

namespace {

using cd = std::complex<double>;

void require_sutherland(const ModelParams& p, const char* what) {
  if (!p.is_sutherland())
    throw std::invalid_argument(std::string(what) + " requires epsilon = 0");
}

}  // namespace

Equilibrium equilibrium(const ModelParams& p) {
  require_sutherland(p, "equilibrium");
  if (!(p.g < 0.0)) throw std::domain_error("no real equilibrium: g must be negative");
  return {0.0, 0.0, 0.0, std::pow(-2.0 * p.g / (p.omega * p.omega), 0.25)};
}

Matrix4 jacobian(const ModelParams& p) {
  (void)equilibrium(p);
  const double w2 = p.omega * p.omega;
  const double gg = 2.0 * p.gamma;
  return {{{0.0, -gg, -w2, 0.0},
           {-gg, 0.0, 0.0, -4.0 * w2},
           {1.0, 0.0, 0.0, 0.0},
           {0.0, 1.0, 0.0, 0.0}}};
}

Spectrum4 eigenvalues_formula(const ModelParams& p) {
  const double w2 = p.omega * p.omega;
  const double P = 5.0 * w2 - 4.0 * p.gamma * p.gamma;
  const cd root = std::sqrt(cd(P * P - 16.0 * w2 * w2));
  const cd lp = std::sqrt((P + root) / 2.0);
  const cd lm = std::sqrt((P - root) / 2.0);
  return {lp, -lp, lm, -lm};
}

Spectrum4 eigenvalues_characteristic(const ModelParams& p) {
  const double w2 = p.omega * p.omega;
  const double P = 5.0 * w2 - 4.0 * p.gamma * p.gamma;
  const cd root = std::sqrt(cd(P * P - 16.0 * w2 * w2));
  // Stable form of the quadratic roots: s1 s2 = 4 omega^4.
  const cd q = -0.5 * (cd(P) + (P >= 0 ? 1.0 : -1.0) * root);
  const cd s1 = q;
  const cd s2 = 4.0 * w2 * w2 / q;
  const cd l1 = std::sqrt(s1), l2 = std::sqrt(s2);
  return {l1, -l1, l2, -l2};
}

Spectrum4 eigenvalues_numeric(const ModelParams& p) {
  const Matrix4 j = jacobian(p);
  Eigen::Matrix4d m;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) m(r, c) = j[r][c];
  Eigen::EigenSolver<Eigen::Matrix4d> solver(m, false);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigensolver failed");
  Spectrum4 out;
  for (int i = 0; i < 4; ++i) out[i] = solver.eigenvalues()[i];
  return out;
}

double characteristic_residual(cd lambda, const ModelParams& p) {
  const double w2 = p.omega * p.omega;
  const double P = 5.0 * w2 - 4.0 * p.gamma * p.gamma;
  const cd s = lambda * lambda;
  return std::abs(s * s + P * s + 4.0 * w2 * w2);
}

double multiset_distance(const Spectrum4& a, const Spectrum4& b) {
  std::array<bool, 4> used{};
  double worst = 0.0;
  for (const cd& x : a) {
    int best = -1;
    double best_d = std::numeric_limits<double>::infinity();
    for (int j = 0; j < 4; ++j) {
      if (used[j]) continue;
      const double d = std::abs(x - b[j]);
      if (d < best_d) {
        best_d = d;
        best = j;
      }
    }
    used[best] = true;
    worst = std::max(worst, best_d);
  }
  return worst;
}

std::string_view to_string(Stability s) {
  return s == Stability::Stable ? "stable" : "unstable";
}

Stability classify_stability(const Spectrum4& eigs) {
  double max_re = -std::numeric_limits<double>::infinity();
  for (const cd& l : eigs) max_re = std::max(max_re, l.real());
  return max_re < kRealPartTolerance ? Stability::Stable : Stability::Unstable;
}

StabilityReport analyze_stability(const ModelParams& p) {
  StabilityReport r;
  r.equilibrium = equilibrium(p);
  r.jacobian = jacobian(p);
  r.eigs_formula = eigenvalues_formula(p);
  r.eigs_char = eigenvalues_characteristic(p);
  r.eigs_numeric = eigenvalues_numeric(p);
  r.P = 5.0 * p.omega * p.omega - 4.0 * p.gamma * p.gamma;
  r.classification = classify_stability(r.eigs_numeric);
  r.marginal = std::all_of(r.eigs_numeric.begin(), r.eigs_numeric.end(),
                           [](const cd& l) { return std::abs(l.real()) < kRealPartTolerance; });
  r.discrepancy_flag = multiset_distance(r.eigs_formula, r.eigs_numeric) > kDiscrepancyTolerance;
  r.claimed_range_bound = std::sqrt(1.25) * p.omega;
  r.within_claimed_range = std::abs(p.gamma) < r.claimed_range_bound;
  return r;
}

NonlinearProbe probe_nonlinear_stability(const ModelParams& p, double perturbation,
                                         double t_max, double threshold) {
  const Equilibrium eq = equilibrium(p);
  const double d = 0.5 * perturbation;  // |(d, d, d, d)| = perturbation
  const PhaseStateZ start{eq.z1 + d, eq.z2 + d, eq.p + d, eq.q + d, 0.0};
  IntegratorOptions opts;
  opts.max_samples = static_cast<std::size_t>(std::ceil(t_max / 0.05)) + 1;
  const TrajectoryZ traj = integrate(start, p, t_max, opts);

  NonlinearProbe probe{0.0, false, std::numeric_limits<double>::quiet_NaN(),
                       traj.diagnostics.termination};
  for (const auto& s : traj.samples) {
    const double dev = std::sqrt((s.v1 - eq.p) * (s.v1 - eq.p) + (s.v2 - eq.q) * (s.v2 - eq.q) +
                                 (s.z1 - eq.z1) * (s.z1 - eq.z1) +
                                 (s.z2 - eq.z2) * (s.z2 - eq.z2));
    probe.max_deviation = std::max(probe.max_deviation, dev);
    if (!probe.exceeded && dev > threshold) {
      probe.exceeded = true;
      probe.first_exceed_time = s.t;
    }
  }
  // A collision or runaway is a departure from equilibrium by definition.
  if (traj.diagnostics.termination != Termination::Completed && !probe.exceeded) {
    probe.exceeded = true;
    probe.first_exceed_time = traj.samples.back().t;
  }
  return probe;
}

PerturbativeSolution::PerturbativeSolution(const ModelParams& p)
    : omega_(p.omega), gamma_(p.gamma), g_(p.g) {
  require_sutherland(p, "perturbative_solution");
}

double PerturbativeSolution::z1(double t) const {
  return kZ1Initial * std::cos(omega_ * t);
}

double PerturbativeSolution::z2(double t) const {
  const double wt = omega_ * t;
  const double s1 = std::sin(wt), c1 = std::cos(wt);
  const double s2 = std::sin(2.0 * wt), c2 = std::cos(2.0 * wt);
  const double k = 0.5 / (3.0 * omega_);
  const double bracket = -k * c2 + k * (2.0 * s1 * s1 * s1 * s2 + (1.0 + s2) * c1 * c2);
  return -2.0 * g_ / (omega_ * omega_) + gamma_ * bracket;
}

PerturbativeSolution perturbative_solution(const ModelParams& p) {
  return PerturbativeSolution(p);
}

Comparison compare_perturbative_numeric(const ModelParams& p, double t_max,
                                        IntegratorOptions opts) {
  const PerturbativeSolution pert(p);
  const TrajectoryZ traj = integrate(PerturbativeSolution::initial_state(), p, t_max, opts);
  Comparison out{{}, 0.0, traj.diagnostics.termination};
  out.rows.reserve(traj.samples.size());
  for (const auto& s : traj.samples) {
    const PhaseStateXY xy = from_normal(s);
    ComparisonRow row{s.t, xy.x, xy.y, pert.x(s.t), pert.y(s.t), 0.0, 0.0};
    row.dx = row.x_num - row.x_pert;
    row.dy = row.y_num - row.y_pert;
    out.max_deviation = std::max({out.max_deviation, std::abs(row.dx), std::abs(row.dy)});
    out.rows.push_back(row);
  }
  return out;
}

}  // namespace ptcalogero::sutherland
