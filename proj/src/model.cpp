#include "ptcalogero/model.hpp"

#include <string>

namespace ptcalogero {

namespace {

bool all_finite(std::initializer_list<double> xs) {
  for (double v : xs)
    if (!std::isfinite(v)) return false;
  return true;
}

void require_calogero(const ModelParams& p, const char* what) {
  if (!p.is_calogero())
    throw std::invalid_argument(std::string(what) +
                                " requires the Calogero limit epsilon = -omega^2");
}

}  // namespace

ModelParams::ModelParams(double omega_, double gamma_, double g_, double epsilon_)
    : omega(omega_), gamma(gamma_), g(g_), epsilon(epsilon_) {
  if (!all_finite({omega, gamma, g, epsilon}))
    throw std::invalid_argument("model parameters must be finite");
  if (!(omega > 0.0)) throw std::invalid_argument("omega must be positive");
}

bool ModelParams::is_calogero() const {
  const double w2 = omega * omega;
  return std::abs(epsilon + w2) <= 1e-12 * w2;
}

PhaseStateXY::PhaseStateXY(double x_, double y_, double vx_, double vy_, double t_)
    : x(x_), y(y_), vx(vx_), vy(vy_), t(t_) {
  if (!all_finite({x, y, vx, vy, t}))
    throw std::domain_error("non-finite phase state");
  if (x == y) throw std::domain_error("coincident particles: x == y");
}

PhaseStateZ::PhaseStateZ(double z1_, double z2_, double v1_, double v2_, double t_)
    : z1(z1_), z2(z2_), v1(v1_), v2(v2_), t(t_) {
  if (!all_finite({z1, z2, v1, v2, t}))
    throw std::domain_error("non-finite phase state");
  if (z2 == 0.0) throw std::domain_error("relative coordinate z2 == 0");
}

PhaseStateZ to_normal(const PhaseStateXY& s) {
  return {s.x + s.y, s.x - s.y, s.vx + s.vy, s.vx - s.vy, s.t};
}

PhaseStateXY from_normal(const PhaseStateZ& s) {
  return {0.5 * (s.z1 + s.z2), 0.5 * (s.z1 - s.z2), 0.5 * (s.v1 + s.v2),
          0.5 * (s.v1 - s.v2), s.t};
}

CanonicalMomenta momenta(const PhaseStateXY& s, const ModelParams& p) {
  const PhaseStateZ z = to_normal(s);
  return {s.vy - p.gamma * s.y, s.vx + p.gamma * s.x,
          0.5 * (z.v1 + p.gamma * z.z2), -0.5 * (z.v2 + p.gamma * z.z1)};
}

double energy_xy(const PhaseStateXY& s, const ModelParams& p) {
  const double d = s.x - s.y;
  if (d == 0.0) throw std::domain_error("energy_xy: x == y");
  const CanonicalMomenta m = momenta(s, p);
  return m.px * m.py + p.gamma * (s.y * m.py - s.x * m.px) +
         (p.omega * p.omega - p.gamma * p.gamma) * s.x * s.y + p.g / (2.0 * d * d) +
         0.5 * p.epsilon * (s.x * s.x + s.y * s.y);
}

double energy_xy_lagrangian(const PhaseStateXY& s, const ModelParams& p) {
  const double d = s.x - s.y;
  if (d == 0.0) throw std::domain_error("energy_xy: x == y");
  return s.vx * s.vy + p.omega * p.omega * s.x * s.y + p.g / (2.0 * d * d) +
         0.5 * p.epsilon * (s.x * s.x + s.y * s.y);
}

double energy_z(const PhaseStateZ& s, const ModelParams& p) {
  require_calogero(p, "energy_z");
  const double pz1 = 0.5 * (s.v1 + p.gamma * s.z2);
  const double pz2 = -0.5 * (s.v2 + p.gamma * s.z1);
  const double w2 = p.omega * p.omega;
  const double g2 = p.gamma * p.gamma;
  return (pz1 * pz1 - pz2 * pz2) - p.gamma * (s.z1 * pz2 + s.z2 * pz1) -
         0.5 * w2 * s.z2 * s.z2 - 0.25 * g2 * (s.z1 * s.z1 - s.z2 * s.z2) +
         p.g / (2.0 * s.z2 * s.z2);
}

double pi_invariant(const PhaseStateZ& s, const ModelParams& p) {
  require_calogero(p, "pi_invariant");
  return s.v1 + 2.0 * p.gamma * s.z2;
}

PhaseStateXY pt_transform(const PhaseStateXY& s) {
  return {-s.y, -s.x, s.vy, s.vx, -s.t};
}

CanonicalPointXY parity(const CanonicalPointXY& c) {
  return {-c.y, -c.x, -c.py, -c.px};
}

}  // namespace ptcalogero
