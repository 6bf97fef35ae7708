#include "ptcalogero/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace ptcalogero {

DerivativeZ eom_rhs(const PhaseStateZ& s, const ModelParams& p) {
  if (s.z2 == 0.0) throw std::domain_error("eom_rhs: z2 == 0");
  const double w2 = p.omega * p.omega;
  const double z2c = s.z2 * s.z2 * s.z2;
  return {s.v1, s.v2, -(w2 + p.epsilon) * s.z1 - 2.0 * p.gamma * s.v2,
          -(w2 - p.epsilon) * s.z2 - 2.0 * p.gamma * s.v1 - 2.0 * p.g / z2c};
}

DerivativeXY eom_rhs_xy(const PhaseStateXY& s, const ModelParams& p) {
  const double d = s.x - s.y;
  if (d == 0.0) throw std::domain_error("eom_rhs_xy: x == y");
  const double w2 = p.omega * p.omega;
  const double core = p.g / (d * d * d);
  return {s.vx, s.vy, -2.0 * p.gamma * s.vx - (w2 * s.x + p.epsilon * s.y) - core,
          2.0 * p.gamma * s.vy - (w2 * s.y + p.epsilon * s.x) + core};
}

void IntegratorOptions::validate() const {
  if (!(rel_tol > 0.0) || !(abs_tol > 0.0))
    throw std::invalid_argument("integrator tolerances must be positive");
  if (!(singular_floor > 0.0)) throw std::invalid_argument("singular_floor must be positive");
  if (!(max_step > 0.0)) throw std::invalid_argument("max_step must be positive");
  if (!(blowup_threshold > 0.0)) throw std::invalid_argument("blowup_threshold must be positive");
  if (max_samples < 2) throw std::invalid_argument("need at least 2 samples");
}

std::string_view to_string(Termination t) {
  switch (t) {
    case Termination::Completed: return "completed";
    case Termination::Singularity: return "singularity";
    case Termination::Blowup: return "blowup";
  }
  return "unknown";
}

namespace {

using Vec4 = std::array<double, 4>;

// Frame adapter: packs a state into four numbers, evaluates the RHS and
// extracts the relative coordinate used for singularity detection.
struct FrameZ {
  using State = PhaseStateZ;
  static Vec4 pack(const State& s) { return {s.z1, s.z2, s.v1, s.v2}; }
  static State unpack(const Vec4& y, double t) { return {y[0], y[1], y[2], y[3], t}; }
  static double relative(const Vec4& y) { return y[1]; }
  static double relative_rate(const Vec4& y) { return y[3]; }
  static Vec4 rhs(const Vec4& y, const ModelParams& p) {
    const double w2 = p.omega * p.omega;
    const double z2c = y[1] * y[1] * y[1];
    return {y[2], y[3], -(w2 + p.epsilon) * y[0] - 2.0 * p.gamma * y[3],
            -(w2 - p.epsilon) * y[1] - 2.0 * p.gamma * y[2] - 2.0 * p.g / z2c};
  }
  static PhaseStateZ as_z(const State& s) { return s; }
};

struct FrameXY {
  using State = PhaseStateXY;
  static Vec4 pack(const State& s) { return {s.x, s.y, s.vx, s.vy}; }
  static State unpack(const Vec4& y, double t) { return {y[0], y[1], y[2], y[3], t}; }
  static double relative(const Vec4& y) { return y[0] - y[1]; }
  static double relative_rate(const Vec4& y) { return y[2] - y[3]; }
  static Vec4 rhs(const Vec4& y, const ModelParams& p) {
    const double w2 = p.omega * p.omega;
    const double d = y[0] - y[1];
    const double core = p.g / (d * d * d);
    return {y[2], y[3], -2.0 * p.gamma * y[2] - (w2 * y[0] + p.epsilon * y[1]) - core,
            2.0 * p.gamma * y[3] - (w2 * y[1] + p.epsilon * y[0]) + core};
  }
  static PhaseStateZ as_z(const State& s) { return to_normal(s); }
};

// Dormand-Prince 5(4) tableau. Row 6 holds the fifth-order weights, so the
// seventh stage is evaluated at the new point (first-same-as-last).
constexpr double kA[7][6] = {
    {},
    {1.0 / 5},
    {3.0 / 40, 9.0 / 40},
    {44.0 / 45, -56.0 / 15, 32.0 / 9},
    {19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561, -212.0 / 729},
    {9017.0 / 3168, -355.0 / 33, 46732.0 / 5247, 49.0 / 176, -5103.0 / 18656},
    {35.0 / 384, 0.0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84},
};
// Difference between the fifth- and fourth-order solutions.
constexpr double kE[7] = {71.0 / 57600,      0.0,          -71.0 / 16695, 71.0 / 1920,
                          -17253.0 / 339200, 22.0 / 525,   -1.0 / 40};

bool finite4(const Vec4& y) {
  return std::isfinite(y[0]) && std::isfinite(y[1]) && std::isfinite(y[2]) &&
         std::isfinite(y[3]);
}

template <class Frame>
Trajectory<typename Frame::State> integrate_impl(const typename Frame::State& initial,
                                                 const ModelParams& p, double t_end,
                                                 const IntegratorOptions& opts) {
  using State = typename Frame::State;
  opts.validate();
  const double t0 = initial.t;
  if (!std::isfinite(t_end) || !(t_end > t0))
    throw std::invalid_argument("integrate: t_end must be finite and after the initial time");

  Trajectory<State> traj{{}, p, {}};
  traj.samples.reserve(opts.max_samples + 1);
  traj.samples.push_back(initial);

  const std::size_t n_grid = opts.max_samples;
  const double dt_grid = (t_end - t0) / static_cast<double>(n_grid - 1);
  auto grid_time = [&](std::size_t i) {
    return i + 1 == n_grid ? t_end : t0 + static_cast<double>(i) * dt_grid;
  };

  Vec4 y = Frame::pack(initial);
  double t = t0;
  const double sign0 = std::signbit(Frame::relative(y)) ? -1.0 : 1.0;

  auto admissible = [&](const Vec4& s) {
    const double r = Frame::relative(s);
    return finite4(s) && std::abs(r) >= opts.singular_floor && r * sign0 > 0.0;
  };

  Vec4 k1 = Frame::rhs(y, p);

  // Initial step from the usual two-evaluation heuristic.
  double h;
  {
    double d0 = 0, d1 = 0;
    for (int i = 0; i < 4; ++i) {
      const double sc = opts.abs_tol + opts.rel_tol * std::abs(y[i]);
      d0 += (y[i] / sc) * (y[i] / sc);
      d1 += (k1[i] / sc) * (k1[i] / sc);
    }
    d0 = std::sqrt(d0 / 4);
    d1 = std::sqrt(d1 / 4);
    h = (d0 < 1e-5 || d1 < 1e-5) ? 1e-6 : 0.01 * d0 / d1;
    h = std::min({h, opts.max_step, t_end - t0});
  }

  constexpr double kCollisionHorizon = 1e-8;
  std::size_t next = 1;
  bool singular_reject = false;
  Diagnostics& diag = traj.diagnostics;

  while (next < n_grid) {
    const double target = grid_time(next);
    const double h_min = 16.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(t));
    if (h < h_min) {
      // Closing in on z2 = 0 faster than any admissible step can follow.
      const double closing = -Frame::relative(y) / Frame::relative_rate(y);
      if (singular_reject || (closing > 0.0 && closing < kCollisionHorizon * std::max(1.0, std::abs(t)))) {
        diag.termination = Termination::Singularity;
        break;
      }
      throw IntegrationError("step size underflow at t = " + std::to_string(t),
                             Frame::as_z(Frame::unpack(y, t)));
    }
    double step = std::min(h, opts.max_step);
    bool lands = false;
    if (t + step >= target - 1e-12 * std::abs(dt_grid)) {
      step = target - t;
      lands = true;
    }

    Vec4 y_new{};
    std::array<Vec4, 7> k;
    k[0] = k1;
    bool rejected = false;
    for (int s = 1; s < 7 && !rejected; ++s) {
      Vec4 ys = y;
      for (int j = 0; j < s; ++j)
        for (int i = 0; i < 4; ++i) ys[i] += step * kA[s][j] * k[j][i];
      if (!admissible(ys)) {
        rejected = true;
        break;
      }
      k[s] = Frame::rhs(ys, p);
      if (s == 6) y_new = ys;
    }
    if (rejected) {
      h = 0.25 * step;
      singular_reject = true;
      ++diag.rejected_steps;
      continue;
    }

    double err = 0.0;
    for (int i = 0; i < 4; ++i) {
      double e = 0.0;
      for (int j = 0; j < 7; ++j) e += kE[j] * k[j][i];
      e *= step;
      const double sc =
          opts.abs_tol + opts.rel_tol * std::max(std::abs(y[i]), std::abs(y_new[i]));
      err += (e / sc) * (e / sc);
    }
    err = std::sqrt(err / 4);
    if (!std::isfinite(err)) err = 1e10;

    if (err > 1.0) {
      singular_reject = false;
      ++diag.rejected_steps;
      h = step * std::max(0.2, 0.9 * std::pow(err, -0.2));
      continue;
    }

    ++diag.accepted_steps;
    singular_reject = false;
    t = lands ? target : t + step;
    y = y_new;
    k1 = k[6];
    const double grow = err == 0.0 ? 5.0 : std::min(5.0, 0.9 * std::pow(err, -0.2));
    // A step shortened to land on the grid says nothing about the admissible size.
    h = lands ? std::max(h, step * grow) : step * grow;

    bool blown = false;
    for (double v : y)
      if (std::abs(v) > opts.blowup_threshold) blown = true;
    if (blown) {
      diag.termination = Termination::Blowup;
      break;
    }
    if (lands) {
      traj.samples.push_back(Frame::unpack(y, t));
      ++next;
    }
  }

  if (diag.termination != Termination::Completed && t > traj.samples.back().t)
    traj.samples.push_back(Frame::unpack(y, t));

  const Diagnostics cons = conservation_report(traj);
  diag.initial_energy = cons.initial_energy;
  diag.max_energy_drift = cons.max_energy_drift;
  diag.max_pi_drift = cons.max_pi_drift;
  return traj;
}

}  // namespace

TrajectoryZ integrate(const PhaseStateZ& initial, const ModelParams& p, double t_end,
                      const IntegratorOptions& opts) {
  return integrate_impl<FrameZ>(initial, p, t_end, opts);
}

TrajectoryXY integrate(const PhaseStateXY& initial, const ModelParams& p, double t_end,
                       const IntegratorOptions& opts) {
  return integrate_impl<FrameXY>(initial, p, t_end, opts);
}

Diagnostics conservation_report(const TrajectoryZ& traj) {
  Diagnostics d;
  if (traj.samples.empty()) return d;
  const ModelParams& p = traj.params;
  d.initial_energy = energy_xy(from_normal(traj.samples.front()), p);
  const bool calogero = p.is_calogero();
  const double pi0 = calogero ? pi_invariant(traj.samples.front(), p) : 0.0;
  double pi_drift = 0.0;
  for (const auto& s : traj.samples) {
    const double h = energy_xy(from_normal(s), p);
    d.max_energy_drift =
        std::max(d.max_energy_drift, std::abs(h - d.initial_energy) / (1.0 + std::abs(d.initial_energy)));
    if (calogero) pi_drift = std::max(pi_drift, std::abs(pi_invariant(s, p) - pi0));
  }
  if (calogero) d.max_pi_drift = pi_drift;
  return d;
}

Diagnostics conservation_report(const TrajectoryXY& traj) {
  Diagnostics d;
  if (traj.samples.empty()) return d;
  const ModelParams& p = traj.params;
  d.initial_energy = energy_xy(traj.samples.front(), p);
  const bool calogero = p.is_calogero();
  const double pi0 = calogero ? pi_invariant(to_normal(traj.samples.front()), p) : 0.0;
  double pi_drift = 0.0;
  for (const auto& s : traj.samples) {
    const double h = energy_xy(s, p);
    d.max_energy_drift =
        std::max(d.max_energy_drift, std::abs(h - d.initial_energy) / (1.0 + std::abs(d.initial_energy)));
    if (calogero) pi_drift = std::max(pi_drift, std::abs(pi_invariant(to_normal(s), p) - pi0));
  }
  if (calogero) d.max_pi_drift = pi_drift;
  return d;
}

}  // namespace ptcalogero
