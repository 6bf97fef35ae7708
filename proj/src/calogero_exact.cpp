#include "ptcalogero/calogero_exact.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ptcalogero/elliptic.hpp"

namespace ptcalogero::calogero {

namespace {
constexpr double pi = std::numbers::pi;
}

std::string_view to_string(Phase p) {
  switch (p) {
    case Phase::Unbroken: return "unbroken";
    case Phase::Boundary: return "boundary";
    case Phase::Broken: return "broken";
  }
  return "unknown";
}

Phase classify_phase(double omega, double gamma) {
  const double w2 = omega * omega;
  const double om2 = 2.0 * (w2 - 2.0 * gamma * gamma);
  if (std::abs(om2) <= 1e-12 * 2.0 * w2) return Phase::Boundary;
  return om2 > 0.0 ? Phase::Unbroken : Phase::Broken;
}

double EffectiveFrequency::omega_eff() const {
  if (phase != Phase::Unbroken)
    throw std::domain_error("effective frequency is not real and positive outside the unbroken phase");
  return std::sqrt(omega_sq_eff);
}

EffectiveFrequency effective_frequency(const ModelParams& p) {
  if (!p.is_calogero())
    throw std::invalid_argument("effective_frequency requires epsilon = -omega^2");
  return {2.0 * (p.omega * p.omega - 2.0 * p.gamma * p.gamma), classify_phase(p.omega, p.gamma)};
}

EPConstants ep_constants(double a, double b, const ModelParams& p, double z1_0) {
  if (b == 0.0 || !std::isfinite(a) || !std::isfinite(b) || !std::isfinite(z1_0))
    throw std::invalid_argument("ep_constants: need finite a, I and b != 0");
  const EffectiveFrequency ef = effective_frequency(p);
  const double om = ef.omega_eff();
  const double om2 = om * om;

  EPConstants c;
  c.a = a;
  c.b = b;
  c.A = (a * a * b * b - 2.0 * p.g) / (b * b * om2);
  c.B = a * b / om;
  c.C = b * b;
  c.D = std::hypot(c.C - c.A, 2.0 * c.B);
  c.k_sq = 2.0 * c.D / (c.C + c.A + c.D);
  c.I = z1_0;
  c.omega_eff = om;
  c.gamma = p.gamma;
  c.g = p.g;
  if (p.g >= 0.0)
    c.warnings.emplace_back("g >= 0: no attractive core, z2 may reach zero");
  return c;
}

PhaseStateZ initial_state(const EPConstants& c) {
  return {c.I, c.b, -2.0 * c.gamma * c.b, c.a, 0.0};
}

double z2_radicand(double t, const EPConstants& c) {
  const double s = std::sin(c.omega_eff * t);
  const double co = std::cos(c.omega_eff * t);
  return c.A * s * s + 2.0 * c.B * s * co + c.C * co * co;
}

double z2_exact(double t, const EPConstants& c) {
  double r = z2_radicand(t, c);
  if (r < 0.0) {
    if (r < -1e-12) throw std::domain_error("z2_exact: negative radicand");
    r = 0.0;
  }
  // z2 keeps the sign of its initial value.
  return std::copysign(std::sqrt(r), c.b);
}

double phi_of_t(double t, const EPConstants& c) {
  if (c.D == 0.0) throw std::domain_error("phi_of_t: D == 0, z2 is constant");
  // (A - C) cos 2wt - 2B sin 2wt = D cos(2wt + delta) = -D cos(2 phi)
  const double delta = std::atan2(2.0 * c.B, c.A - c.C);
  double phi0 = 0.5 * (delta - pi);
  if (phi0 <= -0.5 * pi) phi0 += pi;
  return c.omega_eff * t + phi0;
}

double z1_exact(double t, const EPConstants& c) {
  const double amp = std::sqrt(0.5 * (c.C + c.A + c.D));
  const double scale = std::copysign(2.0 * c.gamma * amp / c.omega_eff, c.b);
  if (c.D == 0.0) return c.I - scale * c.omega_eff * t;
  const double e_t = incomplete_elliptic_e(phi_of_t(t, c), c.k_sq);
  const double e_0 = incomplete_elliptic_e(phi_of_t(0.0, c), c.k_sq);
  return c.I - scale * (e_t - e_0);
}

double z1_exact_zero_velocity(double t, const EPConstants& c) {
  if (c.a != 0.0) throw std::invalid_argument("z1_exact_zero_velocity requires a == 0");
  const double m = 1.0 - c.A / c.C;
  return c.I - 2.0 * c.gamma * c.b / c.omega_eff *
                   incomplete_elliptic_e(c.omega_eff * t, m);
}

namespace {

// int_{t0}^{t1} z2, split into quarter periods so each panel is smooth and short.
double integrate_z2(double t0, double t1, const EPConstants& c) {
  using boost::math::quadrature::gauss_kronrod;
  if (t1 == t0) return 0.0;
  const double panel = 0.25 * z2_period(c);
  const int n = std::max(1, static_cast<int>(std::ceil(std::abs(t1 - t0) / panel)));
  const double h = (t1 - t0) / n;
  auto f = [&c](double s) { return z2_exact(s, c); };
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    const double a = t0 + i * h;
    const double b = i + 1 == n ? t1 : a + h;
    total += gauss_kronrod<double, 31>::integrate(f, a, b, 12, 1e-12);
  }
  return total;
}

}  // namespace

double z1_quadrature(double t, const EPConstants& c) {
  return c.I - 2.0 * c.gamma * integrate_z2(0.0, t, c);
}

std::vector<double> z1_quadrature(std::span<const double> times, const EPConstants& c) {
  std::vector<double> out;
  out.reserve(times.size());
  double t_prev = 0.0, acc = 0.0;
  for (double t : times) {
    if (t < t_prev) throw std::invalid_argument("z1_quadrature: times must be sorted and >= 0");
    acc += integrate_z2(t_prev, t, c);
    out.push_back(c.I - 2.0 * c.gamma * acc);
    t_prev = t;
  }
  return out;
}

bool validity_inequality(double t, const EPConstants& c) {
  const double w = 2.0 * c.omega_eff * t;
  const double lhs = c.D + (c.A - c.C) * std::cos(w);
  const double rhs = 2.0 * c.B * std::sin(w);
  return lhs >= rhs - 1e-12 * std::max(1.0, c.D);
}

double z2_period(const EPConstants& c) { return pi / c.omega_eff; }

double z2_mean(const EPConstants& c) {
  const double amp = std::sqrt(0.5 * (c.C + c.A + c.D));
  return std::copysign((2.0 / pi) * amp * complete_elliptic_e(c.k_sq), c.b);
}

}  // namespace ptcalogero::calogero
