#pragma once

// Quantum sector on the Pi = 0 (k = 0) subspace. The relative-coordinate
// wavefunction solves
//
//   phi'' - (Omega^2/4) z^2 phi + g/(2 z^2) phi = E phi,
//
// with phi(z) = z^lambda exp(-C z^2) sum_n a_n z^n, C = +-Omega/4 and
// lambda (lambda - 1) = -g/2. Termination of the series quantises
// E = -2 C (2n + 1 + 2 lambda), n even.

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "ptcalogero/calogero_exact.hpp"
#include "ptcalogero/model.hpp"

namespace ptcalogero::quantum {

using calogero::Phase;

/// Sign of the Gaussian scale C. Minus (C = -Omega/4) gives a spectrum
/// bounded from below; Plus (C = +Omega/4) is normalisable on the real line.
enum class Branch { Plus, Minus };

std::string_view to_string(Branch b);

struct ExponentRoots {
  double plus;   // (1 + sqrt(1 - 2g)) / 2
  double minus;  // (1 - sqrt(1 - 2g)) / 2
};

/// Throws std::domain_error for g > 1/2 (complex exponents).
ExponentRoots lambda_from_g(double g);

struct QuantumParams {
  double lambda_plus;
  double lambda_minus;
  double lambda;                      // selected: the larger root
  std::complex<double> gauss_scale;   // C; purely imaginary in the broken phase
  double omega_sq_eff;
  Phase phase;
  Branch branch;
  int k = 0;                          // Pi eigenvalue; only k = 0 is solvable
  double g;
  bool repulsive_core;                // 0 < g <= 1/2: computed but flagged

  /// Real C; throws std::domain_error outside the unbroken phase.
  double real_scale() const;
  /// Real Omega; throws std::domain_error outside the unbroken phase.
  double omega_eff() const;
};

/// Requires the Calogero limit and g <= 1/2.
QuantumParams quantum_params(const ModelParams& p, Branch branch = Branch::Minus);

/// Same classifier as the classical effective frequency, so the two
/// transitions coincide by construction.
Phase quantum_phase(const ModelParams& p);

struct QuantumSpectrum {
  std::vector<int> n;                         // 0, 2, 4, ...
  std::vector<std::complex<double>> energies; // E_n = -2 C (2n + 1 + 2 lambda)
  Phase phase;
  Branch branch;
};

/// First M levels (n = 0, 2, ..., 2(M-1)). Complex in the broken phase.
QuantumSpectrum energy_ladder(const QuantumParams& qp, std::size_t M);

/// E for n = 2m, unbroken phase only.
double ladder_energy(const QuantumParams& qp, int m);

struct SeriesSolution {
  std::vector<double> coefficients;  // a_0 .. a_N
  bool terminated = false;
  int degree = -1;  // highest non-zero power when terminated
};

/// Recursion a_{n+2} = [(E + 2C + 4 lambda C) + 4 C n] / [(n + 2)(n + 1 + 2 lambda)] a_n,
/// a_1 = 0. A numerator within 1e-12 (relative) of zero terminates the
/// series. Unbroken phase only; throws std::domain_error on a vanishing
/// denominator.
SeriesSolution series_coefficients(double E, const QuantumParams& qp, std::size_t N,
                                   double a0 = 1.0);

struct TerminationScan {
  std::vector<double> energies;  // ascending
  bool degenerate = false;       // C == 0: no discrete ladder
};

/// Scans [E_lo, E_hi] on `samples` points for zeros of the recursion
/// numerator at even n < N, and keeps the roots at which the series
/// actually terminates.
TerminationScan termination_scan(const QuantumParams& qp, double E_lo, double E_hi,
                                 std::size_t samples, std::size_t N = 200);

/// phi_tilde(z) = |z|^lambda exp(-C z^2) phi_{2m}(z) with a_0 = 1.
double eigenfunction(double z, int m, const QuantumParams& qp);

/// max |phi'' - (Omega^2/4) z^2 phi + g/(2 z^2) phi - E phi| / max |phi| over
/// the samples, with phi'' from a sixth-order central difference. E defaults
/// to the ladder energy of level m.
double eigenfunction_residual(int m, const QuantumParams& qp, std::span<const double> z_samples);
double eigenfunction_residual(int m, const QuantumParams& qp, std::span<const double> z_samples,
                              double energy);

struct FdGrid {
  double length = 0.0;      // 0 selects 12 / sqrt(Omega)
  std::size_t points = 4000;
};

struct FdSpectrum {
  std::vector<double> energies;         // E = -eps, plus branch convention
  std::vector<double> operator_values;  // eps of -d^2 + (Omega^2/4) z^2 - g/(2 z^2)
  std::vector<double> extrapolated;     // Richardson (h, h/2) estimate of eps
  double relative_change;               // max |eps(h/2) - eps(h)| / |eps(h)|
  bool converged;                       // relative_change < 1e-3
};

/// Dirichlet finite differences on (0, L] and a symmetric tridiagonal
/// eigensolve, repeated at half spacing for the convergence estimate.
/// Unbroken phase and g <= 1/2 required.
FdSpectrum fd_spectrum_oracle(const QuantumParams& qp, std::size_t levels, FdGrid grid = {});

struct StokesWedge {
  double center_angle;
  double opening_angle;
};

/// Wedges of the complex z2 plane where
/// psi_0 = z2^lambda exp[(Omega/4) z2^2 - i (gamma/2) z1 z2] decays, given the
/// coefficient (gamma/2) z1 of the linear term. Negative coefficient: one
/// wedge about +i; positive: one about -i; zero: the pair.
std::vector<StokesWedge> stokes_wedges(double linear_coefficient);

}  // namespace ptcalogero::quantum
