#ifndef QTHERM_LINDBLAD_HPP
#define QTHERM_LINDBLAD_HPP

// LGKS generators, time propagation, steady states, heat currents, and
// entropy production for weakly-coupled open systems.

#include <vector>

#include "qtherm/hilbert.hpp"

namespace qtherm {

/// One thermal bath attached through a lowering-type jump operator A at
/// transition frequency omega > 0. The pair of rates (gamma down,
/// gamma e^{-beta omega} up) enforces detailed balance. beta = 0 gives
/// the equal-rate infinite-temperature (work) bath.
struct ThermalDissipator {
  Operator jump;    // lowering-type
  double gamma;     // >= 0
  double beta;      // inverse temperature (0 allowed)
  double omega;     // transition frequency > 0

  void validate() const;
  double upward_rate() const;  // gamma * exp(-beta * omega)
};

/// drho/dt = -i[H, rho] + sum_x D_x(rho)
struct LiouvillianModel {
  Operator hamiltonian;
  std::vector<ThermalDissipator> dissipators;

  void validate() const;
  int dim() const { return hamiltonian.dim(); }
};

/// D(rho) = g (A rho A+ - {A+A, rho}/2) + g e^{-bw} (A+ rho A - {A A+, rho}/2).
/// Traceless hermitian for hermitian rho.
Matrix apply_dissipator(const ThermalDissipator& d, const Matrix& rho);
Operator apply_dissipator(const ThermalDissipator& d, const DensityMatrix& rho);

/// Heisenberg-picture adjoint: tr[O D(rho)] = tr[rho D+(O)] for all rho.
Operator adjoint_dissipator(const ThermalDissipator& d, const Operator& obs);

/// Full generator applied to a (not necessarily valid) state matrix.
Matrix liouvillian_apply(const LiouvillianModel& m, const Matrix& rho);

/// Vectorized generator L with vec(rho) stacked column-major.
Matrix liouvillian_matrix(const LiouvillianModel& m);

struct Propagation {
  DensityMatrix state;
  double trace_drift;  // |tr rho - 1| accumulated before the final renormalization
};

/// Classical fixed-step 4th-order integration of the master equation.
/// The result is re-symmetrized and trace-renormalized once at the end;
/// drift above 1e-6 before renormalization is an accuracy error.
Propagation propagate(const LiouvillianModel& m, const DensityMatrix& rho0,
                      double t, double dt);

/// Unique trace-1 stationary state of the generator, from the null space
/// of the vectorized Liouvillian (SVD rank test). A null space of
/// dimension != 1 raises degenerate_steady_state_error.
DensityMatrix steady_state(const LiouvillianModel& m);

/// J_x = tr[rho D+_x(H)], energy flowing from bath x into the system.
double heat_current(const LiouvillianModel& m, const ThermalDissipator& d,
                    const DensityMatrix& rho);

/// Entropy production rate dS/dt - sum_x beta_x J_x; reduces to
/// -sum_x beta_x J_x at a steady state. The beta = 0 work-bath term drops.
double spohn_entropy_production(const LiouvillianModel& m, const DensityMatrix& rho);

struct EntropyProduction {
  double sigma;  // total entropy production
  double phi;    // entropy flux into the environment
};

/// Entropy production of a global unitary U on S (x) E from the local
/// entropy change and the flux Phi = Delta S(rho_E') + S(rho_E' || rho_E).
EntropyProduction global_entropy_production(const Operator& u,
                                            const DensityMatrix& rho_s,
                                            const DensityMatrix& rho_e);

}  // namespace qtherm

#endif
