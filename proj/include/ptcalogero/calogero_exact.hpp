#pragma once

// Closed-form motion of the Calogero limit (epsilon = -omega^2) on the
// Pi = 0 sector, where the relative coordinate obeys the Ermakov-Pinney
// equation
//
//   z2'' + Omega^2 z2 + 2 g / z2^3 = 0,   Omega^2 = 2 (omega^2 - 2 gamma^2),
//
// and the centre coordinate follows from z1' = -2 gamma z2.

#include <span>
#include <string>
#include <vector>

#include "ptcalogero/model.hpp"

namespace ptcalogero::calogero {

enum class Phase { Unbroken, Boundary, Broken };

std::string_view to_string(Phase p);

/// Sign classification of Omega^2 = 2 (omega^2 - 2 gamma^2). |Omega^2| within
/// 1e-12 * 2 omega^2 of zero counts as the boundary. Shared by the classical
/// and quantum sectors so both transitions sit at |gamma| = omega / sqrt(2).
Phase classify_phase(double omega, double gamma);

struct EffectiveFrequency {
  double omega_sq_eff;
  Phase phase;

  /// Omega; throws std::domain_error outside the unbroken phase.
  double omega_eff() const;
};

/// Throws std::invalid_argument unless p is in the Calogero limit.
EffectiveFrequency effective_frequency(const ModelParams& p);

/// Constants of the exact solution for z2(0) = b, z2'(0) = a,
/// z1(0) = I, z1'(0) = -2 gamma b.
///
/// z2(t)^2 = A sin^2(Omega t) + 2 B sin(Omega t) cos(Omega t) + C cos^2(Omega t)
///
/// A = (a^2 b^2 - 2 g)/(b^2 Omega^2), B = a b / Omega, C = b^2. The
/// oscillating part of z2^2 has amplitude D/2 with
/// D = sqrt((C - A)^2 + 4 B^2), and k_sq = 2 D / (C + A + D).
struct EPConstants {
  double a;
  double b;
  double A;
  double B;
  double C;
  double D;
  double k_sq;
  double I;
  double omega_eff;
  double gamma;
  double g;
  std::vector<std::string> warnings;
};

/// Throws std::invalid_argument for b == 0 or a non-Calogero p, and
/// std::domain_error outside the unbroken phase. g >= 0 is accepted with a
/// warning (no attractive core; z2 may reach zero).
EPConstants ep_constants(double a, double b, const ModelParams& p, double z1_0 = 0.0);

/// Phase-space point the constants describe (Pi = 0 by construction).
PhaseStateZ initial_state(const EPConstants& c);

/// The bracket under the square root of z2(t).
double z2_radicand(double t, const EPConstants& c);

/// z2(t). Radicands in [-1e-12, 0) are clamped to zero; below that the
/// parameters are inconsistent and std::domain_error is thrown.
double z2_exact(double t, const EPConstants& c);

/// Unwrapped angle of the elliptic substitution,
///   sin^2 phi = (D + (A - C) cos 2 Omega t - 2 B sin 2 Omega t) / (2 D).
/// phi(t) = Omega t + phi0 with phi0 in (-pi/2, pi/2] and
/// |sin phi0| = sqrt((D + A - C)/(2 D)); the sign of phi0 follows B.
/// Throws std::domain_error when D == 0 (z2 is then constant).
double phi_of_t(double t, const EPConstants& c);

/// z1(t) = I - 2 gamma sqrt((C + A + D)/2) / Omega * (E(phi(t)|k^2) - E(phi(0)|k^2)).
double z1_exact(double t, const EPConstants& c);

/// Zero-initial-velocity form (a == 0):
///   z1(t) = I - 2 gamma (b / Omega) E(Omega t | 1 - A / C),
/// which for b = 1 carries the parameter 1 + 2 g / Omega^2.
/// Throws std::invalid_argument when a != 0.
double z1_exact_zero_velocity(double t, const EPConstants& c);

/// z1(t) = I - 2 gamma int_0^t z2(s) ds by adaptive Gauss-Kronrod quadrature,
/// absolute error below 1e-10.
double z1_quadrature(double t, const EPConstants& c);

/// z1_quadrature on a sorted list of times (t >= 0), integrating cumulatively.
std::vector<double> z1_quadrature(std::span<const double> times, const EPConstants& c);

/// D + (A - C) cos 2 Omega t >= 2 B sin 2 Omega t, with 1e-12 slack.
bool validity_inequality(double t, const EPConstants& c);

/// Fundamental period of z2(t), pi / Omega.
double z2_period(const EPConstants& c);

/// Time average of z2 over a period, (2/pi) sqrt((C + A + D)/2) E(k^2).
double z2_mean(const EPConstants& c);

}  // namespace ptcalogero::calogero
