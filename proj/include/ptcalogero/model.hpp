#pragma once

// Two-body Calogero/Sutherland system with balanced loss and gain.
//
//   L = x'y' + gamma (x y' - y x') - omega^2 x y - (epsilon/2)(x^2 + y^2)
//       - g / (2 (x - y)^2)
//
// x is the lossy oscillator, y its time-reversed (gaining) partner.
// epsilon = -omega^2 is the Calogero limit (pair-wise harmonic interaction),
// epsilon = 0 the Sutherland limit (common harmonic trap).

#include <cmath>
#include <stdexcept>

namespace ptcalogero {

struct ModelParams {
  double omega;
  double gamma;
  double g;
  double epsilon;

  ModelParams(double omega, double gamma, double g, double epsilon);

  static ModelParams calogero(double omega, double gamma, double g) {
    return {omega, gamma, g, -omega * omega};
  }
  static ModelParams sutherland(double omega, double gamma, double g) {
    return {omega, gamma, g, 0.0};
  }

  /// True when epsilon = -omega^2 up to a relative 1e-12.
  bool is_calogero() const;
  bool is_sutherland() const { return epsilon == 0.0; }

  bool operator==(const ModelParams&) const = default;
};

/// Lab-frame state. Positions and velocities; momenta are derived views.
struct PhaseStateXY {
  double x;
  double y;
  double vx;
  double vy;
  double t;

  /// Throws std::domain_error on x == y or non-finite entries.
  PhaseStateXY(double x, double y, double vx, double vy, double t = 0.0);

  bool operator==(const PhaseStateXY&) const = default;
};

/// Normal-coordinate state: z1 = x + y, z2 = x - y.
struct PhaseStateZ {
  double z1;
  double z2;
  double v1;
  double v2;
  double t;

  /// Throws std::domain_error on z2 == 0 or non-finite entries.
  PhaseStateZ(double z1, double z2, double v1, double v2, double t = 0.0);

  bool operator==(const PhaseStateZ&) const = default;
};

struct CanonicalMomenta {
  double px;
  double py;
  double pz1;
  double pz2;
};

PhaseStateZ to_normal(const PhaseStateXY& s);
PhaseStateXY from_normal(const PhaseStateZ& s);

/// Px = vy - gamma y, Py = vx + gamma x, Pz1 = (v1 + gamma z2)/2,
/// Pz2 = -(v2 + gamma z1)/2.
CanonicalMomenta momenta(const PhaseStateXY& s, const ModelParams& p);

/// Hamiltonian in the lab frame, evaluated through the canonical momenta.
double energy_xy(const PhaseStateXY& s, const ModelParams& p);

/// The same energy written as x'y' + V(x, y); used to cross-check energy_xy.
double energy_xy_lagrangian(const PhaseStateXY& s, const ModelParams& p);

/// Hamiltonian in normal coordinates, Calogero limit only.
///
///   H = Pz1^2 - Pz2^2 - gamma (z1 Pz2 + z2 Pz1) - (omega^2/2) z2^2
///       - (gamma^2/4)(z1^2 - z2^2) + g / (2 z2^2)
///
/// With Pz1, Pz2 taken from the quarter-normalised Lagrangian this is
/// numerically identical to energy_xy(from_normal(s)); no rescaling needed.
double energy_z(const PhaseStateZ& s, const ModelParams& p);

/// Pi = v1 + 2 gamma z2. Conserved only in the Calogero limit.
double pi_invariant(const PhaseStateZ& s, const ModelParams& p);

/// Combined parity and time reversal at the velocity level:
/// (x(t), y(t)) -> (-y(-t), -x(-t)). An involution.
PhaseStateXY pt_transform(const PhaseStateXY& s);

/// Parity alone acting on positions and canonical momenta:
/// x -> -y, y -> -x, Px -> -Py, Py -> -Px.
struct CanonicalPointXY {
  double x, y, px, py;
};
CanonicalPointXY parity(const CanonicalPointXY& c);

}  // namespace ptcalogero
