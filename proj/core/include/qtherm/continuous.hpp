#ifndef QTHERM_CONTINUOUS_HPP
#define QTHERM_CONTINUOUS_HPP

// Autonomous machines built on the Lindblad layer: the three-level maser
// engine and the three-qubit absorption refrigerator.

#include <array>

#include "qtherm/lindblad.hpp"

namespace qtherm {

/// Three-level maser: hot bath drives 0<->2 (omega_h = w3 - w1), cold bath
/// 1<->2 (omega_c = w3 - w2), work bath 0<->1 at infinite temperature.
struct MaserSpec {
  double omega1 = 0.0;
  double omega2 = 40.0;
  double omega3 = 50.0;
  double gamma_h = 1.0;
  double gamma_c = 1.0;
  double gamma_w = 1.0;
  double t_hot = 100.0;
  double t_cold = 10.0;

  double omega_h() const { return omega3 - omega1; }
  double omega_c() const { return omega3 - omega2; }
  double omega_w() const { return omega2 - omega1; }
  void validate() const;
};

struct MaserCurrents {
  double j_hot;   // energy flow from the hot bath into the medium
  double j_cold;  // from the cold bath
  double power;   // J_w; negative when the engine supplies power
};

/// Steady-state populations (p1, p2, p3) of the three-level rate system.
std::array<double, 3> maser_steady_populations(const MaserSpec& spec);

/// Closed-form steady currents from the analytic population solve.
MaserCurrents maser_steady_currents(const MaserSpec& spec);

/// The same machine as a LiouvillianModel (cross-check route).
LiouvillianModel maser_model(const MaserSpec& spec);

/// Currents from the Liouvillian null-space steady state.
MaserCurrents maser_lindblad_currents(const MaserSpec& spec);

/// eta = -P/J_h = 1 - omega_c/omega_h, engine regime only
/// (population inversion requires omega_c/omega_h < T_c/T_h).
double maser_efficiency(const MaserSpec& spec);

/// Three-qubit absorption refrigerator with the trilinear coupling
/// g (sc- sh+ sw- + h.c.) and the resonance omega_w = omega_h - omega_c.
struct QarSpec {
  double omega_h = 2.0;
  double omega_c = 1.0;
  double g = 0.1;
  double t_hot = 2.0;
  double t_cold = 1.0;
  double t_work = 5.0;
  double gamma = 0.002;  // per-qubit bath rate

  double omega_w() const { return omega_h - omega_c; }
  void validate() const;
};

/// beta_v = (beta_h omega_h - beta_w omega_w)/omega_c; cooling is
/// predicted for T_c > 1/beta_v.
double qar_virtual_temperature_inverse(const QarSpec& spec);

/// Three-qubit model, factors ordered (cold, hot, work), local sigma-
/// jump operators with detailed balance at the bare gaps.
LiouvillianModel qar_model(const QarSpec& spec);

struct QarCurrents {
  double j_cold;
  double j_hot;
  double j_work;
  bool cooling;  // j_cold > 0
};

/// 8x8 steady-state solve and per-bath currents.
QarCurrents qar_steady_cooling(const QarSpec& spec);

}  // namespace qtherm

#endif
