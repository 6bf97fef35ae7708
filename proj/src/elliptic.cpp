#include "ptcalogero/elliptic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ptcalogero {

// Duplication algorithms after Carlson (1995), iterated until the arguments
// agree to within the series-truncation threshold.

double carlson_rf(double x, double y, double z) {
  if (x < 0 || y < 0 || z < 0)
    throw std::domain_error("carlson_rf: negative argument");
  if ((x == 0) + (y == 0) + (z == 0) > 1)
    throw std::domain_error("carlson_rf: more than one zero argument");
  double a = (x + y + z) / 3.0;
  // tol^(1/6) ~ 3e-3 gives error below double epsilon.
  double q = std::max({std::abs(a - x), std::abs(a - y), std::abs(a - z)}) / 3e-3;
  double fac = 1.0;
  while (q * fac >= std::abs(a)) {
    const double sx = std::sqrt(x), sy = std::sqrt(y), sz = std::sqrt(z);
    const double lam = sx * sy + sx * sz + sy * sz;
    x = 0.25 * (x + lam);
    y = 0.25 * (y + lam);
    z = 0.25 * (z + lam);
    a = 0.25 * (a + lam);
    fac *= 0.25;
  }
  const double X = (a - x) / a, Y = (a - y) / a, Z = -(X + Y);
  const double e2 = X * Y - Z * Z, e3 = X * Y * Z;
  return (1.0 - e2 / 10.0 + e3 / 14.0 + e2 * e2 / 24.0 - 3.0 * e2 * e3 / 44.0) / std::sqrt(a);
}

double carlson_rd(double x, double y, double z) {
  if (x < 0 || y < 0 || x + y == 0 || !(z > 0))
    throw std::domain_error("carlson_rd: invalid argument");
  double a = (x + y + 3.0 * z) / 5.0;
  double q = std::max({std::abs(a - x), std::abs(a - y), std::abs(a - z)}) / 1.2e-3;
  double fac = 1.0, sum = 0.0;
  while (q * fac >= std::abs(a)) {
    const double sx = std::sqrt(x), sy = std::sqrt(y), sz = std::sqrt(z);
    const double lam = sx * sy + sx * sz + sy * sz;
    sum += fac / (sz * (z + lam));
    x = 0.25 * (x + lam);
    y = 0.25 * (y + lam);
    z = 0.25 * (z + lam);
    a = 0.25 * (a + lam);
    fac *= 0.25;
  }
  const double X = (a - x) / a, Y = (a - y) / a, Z = -(X + Y) / 3.0;
  const double e2 = X * Y - 6.0 * Z * Z;
  const double e3 = (3.0 * X * Y - 8.0 * Z * Z) * Z;
  const double e4 = 3.0 * (X * Y - Z * Z) * Z * Z;
  const double e5 = X * Y * Z * Z * Z;
  const double series = 1.0 - 3.0 * e2 / 14.0 + e3 / 6.0 + 9.0 * e2 * e2 / 88.0 -
                        3.0 * e4 / 22.0 - 9.0 * e2 * e3 / 52.0 + 3.0 * e5 / 26.0;
  return 3.0 * sum + fac * series / (a * std::sqrt(a));
}

double complete_elliptic_e(double m) {
  if (m > 1.0) throw std::domain_error("complete_elliptic_e: m > 1");
  if (m == 1.0) return 1.0;
  const double y = 1.0 - m;
  return carlson_rf(0.0, y, 1.0) - m / 3.0 * carlson_rd(0.0, y, 1.0);
}

namespace {

// |phi| <= pi/2
double elliptic_e_reduced(double phi, double m) {
  const double s = std::sin(phi);
  if (s == 0.0) return 0.0;
  if (m == 1.0) return s;
  const double c = std::cos(phi);
  const double c2 = c * c;
  const double delta = 1.0 - m * s * s;
  return s * carlson_rf(c2, delta, 1.0) - m / 3.0 * s * s * s * carlson_rd(c2, delta, 1.0);
}

}  // namespace

double incomplete_elliptic_e(double phi, double m) {
  if (!std::isfinite(phi) || !std::isfinite(m))
    throw std::domain_error("incomplete_elliptic_e: non-finite argument");
  if (m > 1.0) throw std::domain_error("incomplete_elliptic_e: m > 1");
  if (m == 0.0) return phi;
  constexpr double pi = std::numbers::pi;
  // phi = j pi + r, r in [-pi/2, pi/2]
  const double j = std::nearbyint(phi / pi);
  const double r = phi - j * pi;
  const double base = elliptic_e_reduced(r, m);
  return j == 0.0 ? base : base + 2.0 * j * complete_elliptic_e(m);
}

}  // namespace ptcalogero
