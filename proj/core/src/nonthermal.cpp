#include "qtherm/nonthermal.hpp"

#include <algorithm>
#include <cmath>

namespace qtherm {

void PhaseoniumSpec::validate() const {
  if (t_hot <= 0 || t_cold <= 0)
    throw domain_error("PhaseoniumSpec: temperatures must be > 0");
  if (n_th <= 0) throw domain_error("PhaseoniumSpec: n_th must be > 0");
  if (rho_bc_abs < 0) throw domain_error("PhaseoniumSpec: |rho_bc| must be >= 0");
}

double phaseonium_temperature(const PhaseoniumSpec& spec) {
  spec.validate();
  double eps = 3.0 * spec.rho_bc_abs;
  return spec.t_hot * (1.0 - spec.n_th * eps * std::cos(spec.phi));
}

double phaseonium_efficiency(const PhaseoniumSpec& spec) {
  spec.validate();
  double eta_c = 1.0 - spec.t_cold / spec.t_hot;
  return eta_c -
         3.0 * (spec.t_cold / spec.t_hot) * spec.n_th * spec.rho_bc_abs * std::cos(spec.phi);
}

double phaseonium_photon_fixed_point(double p_a, double p_b, double p_c,
                                     double rho_bc_abs, double phi) {
  if (p_a < 0 || p_b < 0 || p_c < 0 || p_a + p_b + p_c > 1.0 + 1e-12)
    throw domain_error("phaseonium_photon_fixed_point: populations invalid");
  if (p_b + p_c <= 0)
    throw domain_error("phaseonium_photon_fixed_point: P_b + P_c must be > 0");
  double eps = rho_bc_abs / (2.0 * (p_b + p_c));
  double loss = (p_b + p_c) * (1.0 + eps * std::cos(phi));
  double gain = 2.0 * p_a;
  if (gain >= loss)
    throw divergence_error(
        "phaseonium_photon_fixed_point: gain >= loss, photon number has no "
        "fixed point");
  return gain / (loss - gain);
}

void SqueezedOttoSpec::validate() const {
  if (!(omega2 > omega1) || omega1 <= 0)
    throw domain_error("SqueezedOttoSpec: need omega2 > omega1 > 0");
  if (beta1 <= 0 || beta2 <= 0)
    throw domain_error("SqueezedOttoSpec: inverse temperatures must be > 0");
  if (r < 0) throw domain_error("SqueezedOttoSpec: r must be >= 0");
  if (qstar1 < 1 || qstar2 < 1)
    throw domain_error("SqueezedOttoSpec: Q* factors must be >= 1");
}

double squeezed_otto_efficiency(const SqueezedOttoSpec& spec) {
  spec.validate();
  double x = coth(0.5 * spec.beta1 * spec.omega1);
  double y = coth(0.5 * spec.beta2 * spec.omega2);
  double n_th = bose_occupation(spec.omega2, spec.beta2);
  double dh = squeezed_enhancement(spec.r, n_th);
  double denom = spec.qstar1 * x - y * dh;
  if (denom >= 0)
    throw regime_error(
        "squeezed_otto_efficiency: hot isochore absorbs no heat, not an engine");
  return 1.0 - (spec.omega1 / spec.omega2) * (x - spec.qstar2 * y * dh) / denom;
}

double squeezed_eff_max_power(double beta1, double beta2, double r) {
  if (!(beta1 > beta2) || beta2 <= 0)
    throw domain_error("squeezed_eff_max_power: need beta1 > beta2 > 0");
  double s = std::sinh(r);
  return 1.0 - std::sqrt(beta2 / (beta1 * (1.0 + 2.0 * s * s)));
}

double generalized_carnot(double beta1, double beta2, double r) {
  if (!(beta1 > beta2) || beta2 <= 0)
    throw domain_error("generalized_carnot: need beta1 > beta2 > 0");
  double s = std::sinh(r);
  return 1.0 - beta2 / (beta1 * (1.0 + 2.0 * s * s));
}

double squeezed_max_work(double omega, double n_th, double r) {
  if (n_th < 0) throw domain_error("squeezed_max_work: n_th must be >= 0");
  double s = std::sinh(r);
  return omega * (2.0 * n_th + 1.0) * s * s;
}

double squeezed_entropy_flux(double beta, double r, double qdot, double adot) {
  return beta * (std::cosh(2.0 * r) * qdot - std::sinh(2.0 * r) * adot);
}

double ergotropy(const DensityMatrix& rho, const Operator& h) {
  if (!h.hermitian()) throw domain_error("ergotropy: Hamiltonian not hermitian");
  if (rho.dim() != h.dim()) throw dimension_error("ergotropy: dimension mismatch");
  auto er = eigh(rho.mat());  // ascending
  auto eh = eigh(h.mat());    // ascending
  double energy = expectation(rho, h).real();
  // passive energy: populations descending against energies ascending;
  // degenerate blocks are permutation-invariant under this pairing
  double passive = 0;
  const int n = rho.dim();
  for (int k = 0; k < n; ++k) passive += er.values(n - 1 - k) * eh.values(k);
  return energy - passive;
}

double negative_temperature_from_population(double p_plus, double omega) {
  if (!(p_plus > 0 && p_plus < 1))
    throw divergence_error(
        "negative_temperature_from_population: p+ in {0,1} has no finite beta");
  if (omega <= 0)
    throw domain_error("negative_temperature_from_population: omega must be > 0");
  return std::log((1.0 - p_plus) / p_plus) / omega;
}

}  // namespace qtherm
