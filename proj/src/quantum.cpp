#include "ptcalogero/quantum.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace ptcalogero::quantum {

namespace {
using cd = std::complex<double>;
constexpr double pi = std::numbers::pi;
}  // namespace

std::string_view to_string(Branch b) { return b == Branch::Plus ? "plus" : "minus"; }

ExponentRoots lambda_from_g(double g) {
  if (g > 0.5) throw std::domain_error("g > 1/2: complex exponents out of scope");
  const double r = std::sqrt(1.0 - 2.0 * g);
  return {0.5 * (1.0 + r), 0.5 * (1.0 - r)};
}

double QuantumParams::real_scale() const {
  if (phase == Phase::Broken) throw std::domain_error("Gaussian scale is complex in the broken phase");
  return gauss_scale.real();
}

double QuantumParams::omega_eff() const {
  if (phase != Phase::Unbroken) throw std::domain_error("Omega is not positive outside the unbroken phase");
  return std::sqrt(omega_sq_eff);
}

QuantumParams quantum_params(const ModelParams& p, Branch branch) {
  const auto ef = calogero::effective_frequency(p);
  const ExponentRoots roots = lambda_from_g(p.g);
  QuantumParams qp;
  qp.lambda_plus = roots.plus;
  qp.lambda_minus = roots.minus;
  qp.lambda = roots.plus;
  qp.omega_sq_eff = ef.omega_sq_eff;
  qp.phase = ef.phase;
  qp.branch = branch;
  qp.g = p.g;
  qp.repulsive_core = p.g > 0.0;
  const double sign = branch == Branch::Plus ? 1.0 : -1.0;
  if (ef.phase == Phase::Boundary)
    qp.gauss_scale = 0.0;
  else if (ef.phase == Phase::Unbroken)
    qp.gauss_scale = sign * 0.25 * std::sqrt(ef.omega_sq_eff);
  else
    qp.gauss_scale = cd(0.0, sign * 0.25 * std::sqrt(-ef.omega_sq_eff));
  return qp;
}

Phase quantum_phase(const ModelParams& p) { return calogero::classify_phase(p.omega, p.gamma); }

QuantumSpectrum energy_ladder(const QuantumParams& qp, std::size_t M) {
  QuantumSpectrum s{{}, {}, qp.phase, qp.branch};
  for (std::size_t m = 0; m < M; ++m) {
    const int n = 2 * static_cast<int>(m);
    s.n.push_back(n);
    s.energies.push_back(-2.0 * qp.gauss_scale * (2.0 * n + 1.0 + 2.0 * qp.lambda));
  }
  return s;
}

double ladder_energy(const QuantumParams& qp, int m) {
  if (qp.phase != Phase::Unbroken) throw std::domain_error("ladder_energy: unbroken phase only");
  return -2.0 * qp.real_scale() * (4.0 * m + 1.0 + 2.0 * qp.lambda);
}

SeriesSolution series_coefficients(double E, const QuantumParams& qp, std::size_t N, double a0) {
  const double C = qp.real_scale();
  const double lam = qp.lambda;
  SeriesSolution s;
  s.coefficients.assign(N + 1, 0.0);
  s.coefficients[0] = a0;
  const double base = E + 2.0 * C + 4.0 * lam * C;
  bool stopped = false;
  for (std::size_t n = 0; n + 2 <= N; n += 2) {
    const double nn = static_cast<double>(n);
    const double denom = (nn + 2.0) * (nn + 1.0 + 2.0 * lam);
    if (denom == 0.0)
      throw std::domain_error("series_coefficients: vanishing denominator at n = " + std::to_string(n));
    if (stopped) continue;
    const double num = base + 4.0 * C * nn;
    const double scale = std::abs(E) + std::abs(2.0 * C) + std::abs(4.0 * lam * C) + std::abs(4.0 * C * nn);
    if (std::abs(num) <= 1e-12 * scale) {
      s.terminated = true;
      s.degree = static_cast<int>(n);
      stopped = true;
      continue;
    }
    s.coefficients[n + 2] = num / denom * s.coefficients[n];
  }
  return s;
}

TerminationScan termination_scan(const QuantumParams& qp, double E_lo, double E_hi,
                                 std::size_t samples, std::size_t N) {
  TerminationScan out;
  if (qp.phase == Phase::Boundary || qp.gauss_scale == 0.0) {
    out.degenerate = true;
    return out;
  }
  if (samples < 2 || !(E_hi > E_lo)) throw std::invalid_argument("termination_scan: bad range");
  const double C = qp.real_scale();
  const double base_shift = 2.0 * C + 4.0 * qp.lambda * C;
  const double dE = (E_hi - E_lo) / static_cast<double>(samples - 1);
  for (std::size_t n = 0; n + 2 <= N; n += 2) {
    auto num = [&](double E) { return E + base_shift + 4.0 * C * static_cast<double>(n); };
    for (std::size_t i = 0; i + 1 < samples; ++i) {
      const double e0 = E_lo + i * dE;
      const double e1 = i + 2 == samples ? E_hi : e0 + dE;
      const double f0 = num(e0), f1 = num(e1);
      double root;
      if (f0 == 0.0)
        root = e0;
      else if ((f0 < 0.0) != (f1 < 0.0) && f1 != 0.0)
        root = e0 - f0 * (e1 - e0) / (f1 - f0);
      else
        continue;
      // The numerator is affine in E; one Newton step removes interpolation roundoff.
      root -= num(root);
      if (series_coefficients(root, qp, N).terminated) out.energies.push_back(root);
      break;
    }
  }
  std::sort(out.energies.begin(), out.energies.end());
  return out;
}

double eigenfunction(double z, int m, const QuantumParams& qp) {
  const double C = qp.real_scale();
  const SeriesSolution s = series_coefficients(ladder_energy(qp, m), qp, 2 * m + 2);
  double poly = 0.0;
  for (auto it = s.coefficients.rbegin(); it != s.coefficients.rend(); ++it) poly = poly * z + *it;
  return std::pow(std::abs(z), qp.lambda) * std::exp(-C * z * z) * poly;
}

double eigenfunction_residual(int m, const QuantumParams& qp, std::span<const double> z_samples) {
  return eigenfunction_residual(m, qp, z_samples, ladder_energy(qp, m));
}

double eigenfunction_residual(int m, const QuantumParams& qp, std::span<const double> z_samples,
                              double energy) {
  const double om2 = qp.omega_sq_eff;
  double worst = 0.0, norm = 0.0;
  for (double z : z_samples) {
    if (z == 0.0) throw std::domain_error("eigenfunction_residual: z == 0");
    const double h = 1e-3 * std::min(1.0, std::abs(z));
    auto f = [&](double u) { return eigenfunction(u, m, qp); };
    const double f0 = f(z);
    const double d2 = (2.0 * (f(z + 3 * h) + f(z - 3 * h)) - 27.0 * (f(z + 2 * h) + f(z - 2 * h)) +
                       270.0 * (f(z + h) + f(z - h)) - 490.0 * f0) /
                      (180.0 * h * h);
    const double r = d2 - 0.25 * om2 * z * z * f0 + qp.g / (2.0 * z * z) * f0 - energy * f0;
    worst = std::max(worst, std::abs(r));
    norm = std::max(norm, std::abs(f0));
  }
  return norm > 0.0 ? worst / norm : worst;
}

namespace {

std::vector<double> tridiagonal_levels(double omega_sq, double g, double L, std::size_t N,
                                       std::size_t levels) {
  const double h = L / static_cast<double>(N + 1);
  Eigen::VectorXd diag(N), sub(N - 1);
  for (std::size_t i = 0; i < N; ++i) {
    const double z = h * static_cast<double>(i + 1);
    diag[i] = 2.0 / (h * h) + 0.25 * omega_sq * z * z - g / (2.0 * z * z);
  }
  sub.setConstant(-1.0 / (h * h));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw std::runtime_error("tridiagonal eigensolve failed");
  std::vector<double> out(levels);
  for (std::size_t i = 0; i < levels; ++i) out[i] = solver.eigenvalues()[static_cast<Eigen::Index>(i)];
  return out;
}

}  // namespace

FdSpectrum fd_spectrum_oracle(const QuantumParams& qp, std::size_t levels, FdGrid grid) {
  const double om = qp.omega_eff();
  if (qp.g > 0.5) throw std::domain_error("fd_spectrum_oracle: g > 1/2");
  const double L = grid.length > 0.0 ? grid.length : 12.0 / std::sqrt(om);
  if (grid.points < 2 * levels + 2) throw std::invalid_argument("fd_spectrum_oracle: grid too small");

  const auto coarse = tridiagonal_levels(qp.omega_sq_eff, qp.g, L, grid.points, levels);
  // Halving the spacing: N + 1 intervals become 2(N + 1).
  const auto fine = tridiagonal_levels(qp.omega_sq_eff, qp.g, L, 2 * grid.points + 1, levels);

  FdSpectrum s;
  s.relative_change = 0.0;
  for (std::size_t i = 0; i < levels; ++i) {
    s.operator_values.push_back(coarse[i]);
    s.energies.push_back(-coarse[i]);
    s.extrapolated.push_back((4.0 * fine[i] - coarse[i]) / 3.0);
    s.relative_change = std::max(s.relative_change, std::abs(fine[i] - coarse[i]) / std::abs(coarse[i]));
  }
  s.converged = s.relative_change < 1e-3;
  return s;
}

std::vector<StokesWedge> stokes_wedges(double linear_coefficient) {
  constexpr double opening = 0.5 * pi;
  if (linear_coefficient < 0.0) return {{0.5 * pi, opening}};
  if (linear_coefficient > 0.0) return {{-0.5 * pi, opening}};
  return {{0.5 * pi, opening}, {-0.5 * pi, opening}};
}

}  // namespace ptcalogero::quantum
