#ifndef QTHERM_NONTHERMAL_HPP
#define QTHERM_NONTHERMAL_HPP

// Non-thermal resources: phaseonium bath, squeezed-bath Otto engine,
// negative-temperature population mapping, ergotropy.

#include "qtherm/baths.hpp"
#include "qtherm/hilbert.hpp"

namespace qtherm {

/// Phase-coherent three-level bath in the high-temperature regime,
/// coherence parameter eps = 3 |rho_bc|.
struct PhaseoniumSpec {
  double t_hot = 1.0;
  double t_cold = 0.85;
  double n_th = 1e3;       // thermal photon number
  double rho_bc_abs = 3e-6;
  double phi = 0.0;

  void validate() const;
  /// perturbative-validity warning: 3 |rho_bc| n_th no longer << 1
  bool perturbative_warning() const { return 3.0 * rho_bc_abs * n_th >= 0.1; }
};

/// T_phi = T_h (1 - n_th eps cos phi), eps = 3 |rho_bc|.
double phaseonium_temperature(const PhaseoniumSpec& spec);

/// eta = eta_C - 3 (T_c/T_h) n_th |rho_bc| cos phi; exceeds eta_C when
/// the cosine term is negative.
double phaseonium_efficiency(const PhaseoniumSpec& spec);

/// Stationary photon number of the rate equation
///   dn/dt = 2 P_a (n+1) - (P_b + P_c)(1 + eps cos phi) n,
/// with the exact coherence parameter eps = |rho_bc| / (2 (P_b + P_c)).
/// Exists only while loss exceeds gain.
double phaseonium_photon_fixed_point(double p_a, double p_b, double p_c,
                                     double rho_bc_abs, double phi);

/// Squeezed-hot-bath harmonic Otto cycle.
struct SqueezedOttoSpec {
  double omega1 = 1.0;  // cold-side frequency
  double omega2 = 2.0;  // hot-side frequency
  double beta1 = 1.0;   // cold bath
  double beta2 = 0.2;   // hot (squeezed) bath
  double r = 0.0;       // squeezing
  double qstar1 = 1.0;  // compression adiabaticity factor
  double qstar2 = 1.0;  // expansion adiabaticity factor

  void validate() const;
};

/// Full cycle efficiency with coth factors, Delta H(r), and Q* factors.
double squeezed_otto_efficiency(const SqueezedOttoSpec& spec);

/// Efficiency at maximum power, high-T adiabatic limit:
/// 1 - sqrt(beta2 / (beta1 (1 + 2 sinh^2 r))); Curzon-Ahlborn at r = 0.
double squeezed_eff_max_power(double beta1, double beta2, double r);

/// Generalized Carnot bound 1 - beta2 / (beta1 (1 + 2 sinh^2 r)).
double generalized_carnot(double beta1, double beta2, double r);

/// W_max = omega (2 n_th + 1) sinh^2 r, unsqueezing work of a squeezed
/// thermal mode.
double squeezed_max_work(double omega, double n_th, double r);

/// Entropy flux identity for a squeezed bath evaluated on user-supplied
/// heat and asymmetry rates: Phi_dot = beta (cosh(2r) Qdot - sinh(2r) Adot).
double squeezed_entropy_flux(double beta, double r, double qdot, double adot);

/// Maximum unitary work tr[rho H] - sum_k lambda_k(desc) eps_k(asc);
/// zero exactly for passive states.
double ergotropy(const DensityMatrix& rho, const Operator& h);

/// beta = ln((1 - p+)/p+)/omega; negative for inverted populations.
double negative_temperature_from_population(double p_plus, double omega);

}  // namespace qtherm

#endif
