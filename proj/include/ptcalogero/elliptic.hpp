#pragma once

namespace ptcalogero {

/// Carlson's symmetric integral of the first kind,
/// R_F(x, y, z) = 1/2 int_0^inf dt / sqrt((t+x)(t+y)(t+z)).
/// Arguments non-negative, at most one of them zero.
double carlson_rf(double x, double y, double z);

/// Carlson's degenerate integral of the third kind,
/// R_D(x, y, z) = 3/2 int_0^inf dt / ((t+z) sqrt((t+x)(t+y)(t+z))).
/// x, y non-negative with x + y > 0, z > 0.
double carlson_rd(double x, double y, double z);

/// Complete integral of the second kind E(m), parameter convention (m = k^2).
double complete_elliptic_e(double m);

/// Incomplete integral of the second kind in the parameter convention,
///
///   E(phi | m) = int_0^phi sqrt(1 - m sin^2 theta) dtheta,
///
/// for any real phi and m <= 1. Large |phi| is reduced by the
/// quasi-periodicity E(phi + pi | m) = E(phi | m) + 2 E(m).
/// Throws std::domain_error for m > 1.
double incomplete_elliptic_e(double phi, double m);

}  // namespace ptcalogero
