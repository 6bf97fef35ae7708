#pragma once

#include <array>
#include <cstddef>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "ptcalogero/model.hpp"

namespace ptcalogero {

struct DerivativeZ {
  double dz1, dz2, dv1, dv2;
};

struct DerivativeXY {
  double dx, dy, dvx, dvy;
};

/// Right-hand side in normal coordinates:
///   z1'' = -(omega^2 + epsilon) z1 - 2 gamma z2'
///   z2'' = -(omega^2 - epsilon) z2 - 2 gamma z1' - 2 g / z2^3
DerivativeZ eom_rhs(const PhaseStateZ& s, const ModelParams& p);

/// Right-hand side in the lab frame:
///   x'' = -2 gamma x' - (omega^2 x + epsilon y) - g / (x - y)^3
///   y'' = +2 gamma y' - (omega^2 y + epsilon x) + g / (x - y)^3
DerivativeXY eom_rhs_xy(const PhaseStateXY& s, const ModelParams& p);

struct IntegratorOptions {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  double max_step = std::numeric_limits<double>::infinity();
  double singular_floor = 1e-8;   // minimum admissible |z2|
  std::size_t max_samples = 2000; // points on the output grid, endpoints included
  double blowup_threshold = 1e12;

  /// Throws std::invalid_argument on non-positive tolerances or < 2 samples.
  void validate() const;
};

enum class Termination { Completed, Singularity, Blowup };

std::string_view to_string(Termination t);

struct Diagnostics {
  double initial_energy = 0.0;
  double max_energy_drift = 0.0;        // max |H - H0| / (1 + |H0|)
  std::optional<double> max_pi_drift;   // Calogero limit only
  Termination termination = Termination::Completed;
  std::size_t accepted_steps = 0;
  std::size_t rejected_steps = 0;
};

template <class State>
struct Trajectory {
  std::vector<State> samples;
  ModelParams params;
  Diagnostics diagnostics;
};

using TrajectoryZ = Trajectory<PhaseStateZ>;
using TrajectoryXY = Trajectory<PhaseStateXY>;

/// Raised when the step size underflows away from any recognised singularity.
class IntegrationError : public std::runtime_error {
 public:
  IntegrationError(const std::string& what, const PhaseStateZ& last)
      : std::runtime_error(what), last_good_(last) {}
  const PhaseStateZ& last_good_state() const { return last_good_; }

 private:
  PhaseStateZ last_good_;
};

/// Adaptive Dormand-Prince 5(4) integration from initial.t to t_end.
///
/// Samples are produced on an equally spaced grid of opts.max_samples points;
/// the stepper lands exactly on every grid time, so no interpolation error is
/// added. Integration stops early with Termination::Singularity when |z2|
/// drops below opts.singular_floor, a step would carry z2 through zero, or
/// the step size underflows while z2 / z2' predicts a collision within
/// 1e-8 (relative to t); and with Termination::Blowup when a component exceeds
/// opts.blowup_threshold. In either case the terminal state is appended as a
/// final off-grid sample.
TrajectoryZ integrate(const PhaseStateZ& initial, const ModelParams& p, double t_end,
                      const IntegratorOptions& opts = {});
TrajectoryXY integrate(const PhaseStateXY& initial, const ModelParams& p, double t_end,
                       const IntegratorOptions& opts = {});

/// Energy drift over the samples, plus Pi drift when the parameters are in
/// the Calogero limit. Termination and step counters are left at defaults.
Diagnostics conservation_report(const TrajectoryZ& traj);
Diagnostics conservation_report(const TrajectoryXY& traj);

}  // namespace ptcalogero
