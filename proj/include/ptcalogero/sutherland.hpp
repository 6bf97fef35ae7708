#pragma once

// Sutherland limit (epsilon = 0): equilibrium, linear stability and the
// first-order perturbative solution in gamma.

#include <array>
#include <complex>
#include <vector>

#include "ptcalogero/dynamics.hpp"
#include "ptcalogero/model.hpp"

namespace ptcalogero::sutherland {

using Matrix4 = std::array<std::array<double, 4>, 4>;
using Spectrum4 = std::array<std::complex<double>, 4>;

/// Stationary point in (p, q, z1, z2) = (z1', z2', z1, z2).
struct Equilibrium {
  double p = 0.0;
  double q = 0.0;
  double z1 = 0.0;
  double z2 = 0.0;
};

/// (0, 0, 0, (-2 g / omega^2)^(1/4)). Throws std::invalid_argument unless
/// epsilon == 0, std::domain_error for g >= 0 (no real equilibrium).
Equilibrium equilibrium(const ModelParams& p);

/// Linearisation in the deviations (v1..v4) = (dp, dq, dz1, dz2):
///   [    0    -2 gamma  -omega^2      0     ]
///   [ -2 gamma    0        0     -4 omega^2 ]
///   [    1        0        0         0      ]
///   [    0        1        0         0      ]
/// The -4 omega^2 entry is d/dz2 (omega^2 z2 + 2 g / z2^3) at equilibrium,
/// which is independent of g.
Matrix4 jacobian(const ModelParams& p);

/// lambda = +-[(P +- sqrt(P^2 - 16 omega^4)) / 2]^(1/2), P = 5 omega^2 - 4 gamma^2,
/// evaluated as written in complex arithmetic. This closed form does not
/// follow from the matrix above (at gamma = 0 it gives real +-1, +-2).
Spectrum4 eigenvalues_formula(const ModelParams& p);

/// Roots of the matrix's characteristic polynomial,
/// (lambda^2 + omega^2)(lambda^2 + 4 omega^2) = 4 gamma^2 lambda^2, via
/// s = lambda^2: s = (-P +- sqrt(P^2 - 16 omega^4)) / 2.
Spectrum4 eigenvalues_characteristic(const ModelParams& p);

/// General dense eigensolver applied to jacobian(p).
Spectrum4 eigenvalues_numeric(const ModelParams& p);

/// |s^2 + P s + 4 omega^4| with s = lambda^2.
double characteristic_residual(std::complex<double> lambda, const ModelParams& p);

/// Largest distance between matched elements of two 4-element multisets
/// (greedy nearest matching).
double multiset_distance(const Spectrum4& a, const Spectrum4& b);

enum class Stability { Stable, Unstable };

std::string_view to_string(Stability s);

inline constexpr double kRealPartTolerance = 1e-10;
inline constexpr double kDiscrepancyTolerance = 1e-8;

/// Stable iff every eigenvalue has real part below kRealPartTolerance.
Stability classify_stability(const Spectrum4& eigs);

struct StabilityReport {
  Equilibrium equilibrium;
  Matrix4 jacobian;
  Spectrum4 eigs_formula;
  Spectrum4 eigs_char;
  Spectrum4 eigs_numeric;
  double P;
  Stability classification;
  /// All eigenvalues on the imaginary axis: linearisation is inconclusive.
  bool marginal;
  /// eigs_formula and eigs_numeric differ beyond kDiscrepancyTolerance.
  bool discrepancy_flag;
  /// |gamma| < sqrt(5/4) omega, the range the closed form calls stable.
  bool within_claimed_range;
  double claimed_range_bound;
};

/// Classification uses eigs_numeric.
StabilityReport analyze_stability(const ModelParams& p);

struct NonlinearProbe {
  double max_deviation;      // max Euclidean distance from equilibrium in (p, q, z1, z2)
  bool exceeded;             // max_deviation > threshold
  double first_exceed_time;  // NaN when not exceeded
  Termination termination;
};

/// Integrates the full nonlinear equations from the equilibrium displaced by
/// `perturbation` (Euclidean norm, spread equally over p, q, z1, z2) and
/// tracks the distance from equilibrium over [0, t_max].
NonlinearProbe probe_nonlinear_stability(const ModelParams& p, double perturbation = 1e-3,
                                         double t_max = 200.0, double threshold = 0.1);

/// First-order solution for z1(0) = 0.5, z2(0) = 1, z1'(0) = z2'(0) = 0:
///
///   z1 = 0.5 cos wt
///   z2 = -2g/w^2 + gamma [ -(0.5/3w) cos 2wt
///          + (0.5/3w) { 2 sin^3 wt sin 2wt + (1 + sin 2wt) cos wt cos 2wt } ]
///
/// The constant term is -2g/w^2 as written, not the equilibrium
/// (-2g/w^2)^(1/4); they agree (both 1) at g = -0.5, w = 1.
class PerturbativeSolution {
 public:
  explicit PerturbativeSolution(const ModelParams& p);

  static constexpr double kZ1Initial = 0.5;
  static constexpr double kZ2Initial = 1.0;

  double z1(double t) const;
  double z2(double t) const;
  double x(double t) const { return 0.5 * (z1(t) + z2(t)); }
  double y(double t) const { return 0.5 * (z1(t) - z2(t)); }

  /// The fixed initial data as a phase-space point.
  static PhaseStateZ initial_state() { return {kZ1Initial, kZ2Initial, 0.0, 0.0, 0.0}; }

 private:
  double omega_;
  double gamma_;
  double g_;
};

PerturbativeSolution perturbative_solution(const ModelParams& p);

struct ComparisonRow {
  double t;
  double x_num, y_num;
  double x_pert, y_pert;
  double dx, dy;  // numeric minus perturbative
};

struct Comparison {
  std::vector<ComparisonRow> rows;
  double max_deviation;  // max over rows of max(|dx|, |dy|)
  Termination termination;
};

/// Numerical vs perturbative x(t), y(t) on an equally spaced grid over [0, t_max].
Comparison compare_perturbative_numeric(const ModelParams& p, double t_max,
                                        IntegratorOptions opts = {});

}  // namespace ptcalogero::sutherland
