#pragma once

#include <cmath>

#include "ptcalogero/model.hpp"

namespace testing {

// Lab-frame Lagrangian written out independently of the library:
//   L = vx vy + gamma (x vy - vx y) - w^2 x y - g / (2 (x - y)^2) - (eps/2)(x^2 + y^2)
inline double lagrangian(double x, double y, double vx, double vy, const ptcalogero::ModelParams& p) {
  const double d = x - y;
  return vx * vy + p.gamma * (x * vy - vx * y) - p.omega * p.omega * x * y - p.g / (2.0 * d * d) -
         0.5 * p.epsilon * (x * x + y * y);
}

struct OracleMomenta {
  double px, py;
};

// Momenta by central differences in the velocities (exact for a quadratic L
// up to roundoff).
inline OracleMomenta fd_momenta(const ptcalogero::PhaseStateXY& s, const ptcalogero::ModelParams& p) {
  const double h = 1e-5;
  return {(lagrangian(s.x, s.y, s.vx + h, s.vy, p) - lagrangian(s.x, s.y, s.vx - h, s.vy, p)) / (2 * h),
          (lagrangian(s.x, s.y, s.vx, s.vy + h, p) - lagrangian(s.x, s.y, s.vx, s.vy - h, p)) / (2 * h)};
}

inline double legendre_energy(const ptcalogero::PhaseStateXY& s, const ptcalogero::ModelParams& p) {
  const auto m = fd_momenta(s, p);
  return m.px * s.vx + m.py * s.vy - lagrangian(s.x, s.y, s.vx, s.vy, p);
}

struct OracleAccel {
  double ax, ay;
};

// Euler-Lagrange accelerations. The kinetic matrix couples vx with vy, so
// d/dt dL/dvx = ay - gamma vy and d/dt dL/dvy = ax + gamma vx; the position
// gradients come from central differences.
inline OracleAccel euler_lagrange(const ptcalogero::PhaseStateXY& s, const ptcalogero::ModelParams& p) {
  const double h = 1e-6;
  const double dLdx = (lagrangian(s.x + h, s.y, s.vx, s.vy, p) - lagrangian(s.x - h, s.y, s.vx, s.vy, p)) / (2 * h);
  const double dLdy = (lagrangian(s.x, s.y + h, s.vx, s.vy, p) - lagrangian(s.x, s.y - h, s.vx, s.vy, p)) / (2 * h);
  // d/dt (vy - gamma y) = dL/dx ;  d/dt (vx + gamma x) = dL/dy
  return {dLdy - p.gamma * s.vx, dLdx + p.gamma * s.vy};
}

}  // namespace testing
