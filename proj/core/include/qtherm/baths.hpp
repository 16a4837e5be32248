#ifndef QTHERM_BATHS_HPP
#define QTHERM_BATHS_HPP

// Reservoir descriptors: occupations, spectral densities, bath correlation
// functions, squeezing factors, polaron renormalization.

#include <complex>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qtherm/errors.hpp"
#include "qtherm/quad.hpp"

namespace qtherm {

/// A reservoir: inverse temperature, optional chemical potential for
/// fermionic leads, optional squeezing (r, theta present together).
struct BathSpec {
  double beta = 1.0;
  std::optional<double> mu;
  std::optional<double> squeeze_r;
  std::optional<double> squeeze_theta;

  void validate() const;
};

// J(omega) = gamma * omega * exp(-omega/omega_c), m := 1
struct OhmicDensity {
  double gamma = 1.0;
  double omega_c = 1.0;
};

// J(omega) = d1 * gamma1 * omega / ((omega^2 - omega1^2)^2 + gamma1^2 omega^2)
struct LorentzianDensity {
  double d1 = 1.0;
  double gamma1 = 1.0;
  double omega1 = 1.0;
};

// Piecewise-linear J on an ascending grid; zero outside the grid range.
struct TabulatedDensity {
  std::vector<double> omega;
  std::vector<double> j;

  double operator()(double w) const;
  /// Two-column CSV (omega, J); '#' comments allowed.
  static TabulatedDensity from_csv(const std::string& path);
};

using SpectralDensity = std::variant<OhmicDensity, LorentzianDensity, TabulatedDensity>;

double spectral_density_value(const SpectralDensity& j, double omega);

/// 1/(e^{beta omega} - 1); beta*omega = 0 diverges.
double bose_occupation(double omega, double beta);

/// 1/(e^{beta(E-mu)} + 1); requires lead.mu.
double fermi_distribution(double energy, const BathSpec& lead);

/// coth(x) with the small-x series below |x| < 1e-6 to avoid cancellation.
double coth(double x);

/// L(t) = (1/pi) Int_0^inf dw J(w) [coth(beta w/2) cos(w t) - i sin(w t)]
std::complex<double> bath_correlation(const SpectralDensity& j, double beta,
                                      double t, double abs_tol = kQuadDefaultTol);

/// <B> = exp[-(1/2) Int_0^inf dw J(w)/w^2 coth(beta w/2)] in (0, 1].
/// The discrete mode sum is promoted to this continuum integral over J.
/// Infrared-divergent inputs (J ~ w near 0, i.e. Ohmic/Lorentzian) throw.
double polaron_factor(const SpectralDensity& j, double beta,
                      double abs_tol = kQuadDefaultTol);

/// Delta H(r) = 1 + (2 + 1/n_th) sinh^2(r), the squeezed/thermal
/// occupation ratio of a mode with thermal occupation n_th.
double squeezed_enhancement(double r, double n_th);

}  // namespace qtherm

#endif
