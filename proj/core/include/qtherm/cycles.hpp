#ifndef QTHERM_CYCLES_HPP
#define QTHERM_CYCLES_HPP

// Quasistatic stroke cycles (Carnot, Otto) for TLS, harmonic-oscillator,
// LMG, and generic working media, plus closed-form many-body corrections.
//
// Sign conventions, fixed once: W < 0 means work extracted from the
// medium; Q > 0 means heat absorbed by the medium.

#include <functional>

#include "qtherm/hilbert.hpp"

namespace qtherm {

enum class CycleMode { engine, refrigerator, heater };

struct CycleResult {
  double work;    // net, W = -(Q_h + Q_c)
  double q_hot;   // heat absorbed from the hot bath
  double q_cold;  // heat absorbed from the cold bath
  CycleMode mode;
  double eta;  // efficiency; NaN unless engine mode
  double cop;  // coefficient of performance Q_c/W; NaN unless refrigerator
  bool crossing_warning = false;  // eigenvalue crossing along the stroke path
};

/// H(lambda) builders for the generic Otto cycle.
using MediumBuilder = std::function<Operator(double)>;

/// Two-spin LMG Hamiltonian
/// H = -(J/4)[sx sx + g sy sy] - (h/2)[sz + sz] - J(1+g)/4.
Operator lmg_hamiltonian(double j, double gamma_anisotropy, double h);

/// Closed-form quasistatic Otto cycle for a two-level medium,
/// n_x = (1 + e^{beta_x gap_x})^{-1}.
CycleResult otto_quasistatic_tls(double gap_cold, double gap_hot, double t_hot,
                                 double t_cold);

/// Same cycle for a harmonic oscillator, n_x = (e^{beta_x w_x} - 1)^{-1}.
CycleResult otto_quasistatic_ho(double omega_cold, double omega_hot, double t_hot,
                                double t_cold);

/// Reversible TLS Carnot cycle with levels (-eps, +eps) during the hot
/// isotherm, adiabatic endpoints fixed by eps_C = eps_B T_c/T_h.
/// eta = 1 - T_c/T_h exactly; W = -(T_h - T_c) DeltaS_h from the hot
/// isotherm entropy change.
CycleResult carnot_quasistatic_tls(double eps_a, double eps_b, double t_hot,
                                   double t_cold);

/// Quasistatic Otto cycle on an arbitrary H(lambda): isochores thermalize
/// at the endpoints, adiabats carry populations unchanged in the
/// instantaneous eigenbasis (eigenvalues sorted ascending; crossings along
/// the linear lambda path are flagged, not resolved).
CycleResult generic_quasistatic_otto(const MediumBuilder& medium, double lambda_cold,
                                     double lambda_hot, double t_hot, double t_cold);

/// Nonadiabatic Otto efficiency with adiabaticity factors Q* >= 1 for the
/// compression (A->B) and expansion (C->D) strokes:
///   eta = 1 - (w1/w2) [Q*_CD <H>_C - (w2/w1) <H>_A]
///                    / [(w1/w2) <H>_C - Q*_AB <H>_A].
/// Reduces to 1 - w1/w2 at Q* = 1.
double nonadiabatic_otto_efficiency(double omega1, double omega2, double e_a,
                                    double e_c, double qstar_ab, double qstar_cd);

/// Kibble-Zurek defect-density exponent nu d / (nu z + 1).
double kz_exponent(double nu, double z, double d);

struct HeatFlow {
  double qdot;         // > 0: heat extracted from the reservoir
  double temperature;  // reservoir temperature
};

/// Hybrid-machine efficiency: useful over wasteful free-energy terms at
/// reference temperature t_ref. Work flows are signed (positive = useful
/// output); heats enter as Qdot_i (T_r/T_i - 1).
double hybrid_efficiency(const std::vector<double>& work_flows,
                         const std::vector<HeatFlow>& heat_flows, double t_ref);

}  // namespace qtherm

#endif
